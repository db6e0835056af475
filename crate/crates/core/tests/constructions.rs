use lda_core::coloring::{nbc_complete_multipartite, nbc_cycle, non_pendant_nbc_search};
use lda_core::constructions::*;
use lda_core::graph::{generate, FamilySpec, FamilySpec::*, Graph};
use lda_core::labeling::{pendant_lower_bound, verify_lda, Labeling};
use lda_core::solver::{chi_exact, chi_ld_exact, find_lda, SearchBudget};
use lda_core::{LdaError, SignColoring};

const ORACLE_MAX_ORDER: usize = 9;

fn gen(s: FamilySpec) -> Graph {
    generate(&s).unwrap()
}

fn optimal(g: &Graph) -> Labeling {
    chi_ld_exact(g, SearchBudget::default())
        .unwrap()
        .witness
        .unwrap()
}

fn check(r: &ConstructionResult) {
    let rep = verify_lda(&r.graph, &r.labeling).unwrap();
    assert!(rep.is_lda);
    assert_eq!(rep, r.report);
    assert!(r.color_count() <= r.claimed_bound);
    if r.graph.order() <= ORACLE_MAX_ORDER {
        let chi = chi_ld_exact(&r.graph, SearchBudget::default()).unwrap();
        assert!(chi.chi_ld.exact().unwrap() <= r.color_count());
    }
}

/// Even-regular graphs with a known balanced coloring.
fn nbc_bases() -> Vec<(Graph, SignColoring)> {
    vec![
        (gen(Cycle(4)), nbc_cycle(4).unwrap()),
        (gen(Cycle(8)), nbc_cycle(8).unwrap()),
        (
            gen(CompleteMultipartite(vec![2, 2])),
            nbc_complete_multipartite(&[2, 2]).unwrap(),
        ),
        (
            gen(CompleteMultipartite(vec![2, 2, 2])),
            nbc_complete_multipartite(&[2, 2, 2]).unwrap(),
        ),
    ]
}

#[test]
fn books() {
    assert!(label_book_c4(0).is_err());
    for t in 1..=6 {
        let r = label_book_c4(t).unwrap();
        check(&r);
        assert_eq!(r.color_count(), t + 1);
        if t >= 2 {
            let mut expect = book_weight_values(t);
            expect.sort_unstable();
            expect.dedup();
            assert_eq!(
                r.report.weight_classes.keys().copied().collect::<Vec<_>>(),
                expect
            );
        }
    }
}

#[test]
fn coronas() {
    for base in [
        gen(Cycle(3)),
        gen(Cycle(4)),
        gen(Cycle(5)),
        gen(Complete(4)),
        gen(Wheel(4)),
    ] {
        let f = optimal(&base);
        let n = base.order();
        let colors = verify_lda(&base, &f).unwrap().color_count;
        for p in 1..=3 {
            let r = label_corona(&base, &f, p).unwrap();
            check(&r);
            assert!(r.color_count() <= colors + n);
            assert!(r.color_count() >= chi_exact(&base).unwrap() + n);
        }
    }
}

#[test]
fn nbc_copies() {
    for (g, sigma) in nbc_bases() {
        let f = optimal(&g);
        let colors = verify_lda(&g, &f).unwrap().color_count;
        for m in 1..=4 {
            let r = label_copies_nbc(&g, &f, &sigma, m).unwrap();
            check(&r);
            assert!(r.color_count() <= colors);
            let law = copy_weight_law(&g, &f, m).unwrap();
            for (id, &w) in r.report.weights.iter().enumerate() {
                assert_eq!(w as i64, law[id % g.order()]);
            }
        }
    }
}

#[test]
fn star_copies() {
    for leaves in [2, 4, 6, 8] {
        let g = gen(Star(leaves));
        let f = Labeling::identity(leaves + 1);
        let sigma = non_pendant_nbc_search(&g, 24).unwrap().unwrap();
        for m in 1..=4 {
            let r = label_copies_pendant(&g, &f, &sigma, m).unwrap();
            check(&r);
            assert_eq!(r.color_count(), m + 1);
        }
    }
}

#[test]
fn odd_bistar_copies() {
    for (c, d) in [(1, 1), (1, 3), (3, 3), (3, 5)] {
        let g = gen(Bistar(c, d));
        let sigma = non_pendant_nbc_search(&g, 24).unwrap().unwrap();
        let found = find_lda(&g, 4, SearchBudget::default(), |f| {
            (1..=4).all(|m| check_pendant_copy_conditions(&g, f, m).unwrap())
        })
        .unwrap();
        let f = found
            .witness()
            .expect("bistar labeling meeting the copy conditions");
        for m in 1..=4 {
            let r = label_copies_pendant(&g, f, &sigma, m).unwrap();
            check(&r);
            let lower = pendant_lower_bound(&r.graph).unwrap().certified;
            assert_eq!(lower, 2 * m + 1);
            assert!(
                (lower..=2 * m + 2).contains(&r.color_count()),
                "B{c},{d} m={m}"
            );
        }
    }
}

#[test]
fn direct_nbc_products() {
    let factors = [
        gen(Complete(2)),
        gen(Cycle(3)),
        gen(Cycle(4)),
        gen(Complete(4)),
        gen(CompleteMultipartite(vec![3, 3])),
        gen(Cycle(8)),
    ];
    for (g, sigma) in nbc_bases() {
        let f = optimal(&g);
        let colors = verify_lda(&g, &f).unwrap().color_count;
        for h in &factors {
            let r = label_direct_nbc(&g, &f, &sigma, h).unwrap();
            check(&r);
            assert!(r.color_count() <= colors);
        }
    }
}

#[test]
fn direct_complete_bipartite_products() {
    let bases = [
        gen(Complete(2)),
        gen(Cycle(3)),
        gen(Cycle(4)),
        gen(Cycle(5)),
        gen(Cycle(7)),
        gen(Complete(4)),
        gen(Complete(5)),
        gen(CompleteMultipartite(vec![3, 3])),
    ];
    for g in &bases {
        let (n, r) = (g.order(), g.regular_degree().unwrap());
        for n1 in 1..=5 {
            for n2 in 1..=5 {
                let res = label_direct_complete_bipartite(g, n1, n2);
                match direct_bipartite_case(n, n1, n2) {
                    DirectCase::MixedEvenOrder => {
                        assert!(matches!(res, Err(LdaError::UnsupportedCase(_))));
                        continue;
                    }
                    _ if n1 % 2 == 1 && n1 < 3 || n2 % 2 == 1 && n2 < 3 => {
                        assert!(matches!(res, Err(LdaError::UnsupportedParameter(_))));
                        continue;
                    }
                    _ => {}
                }
                let res = res.unwrap();
                check(&res);
                assert_eq!(res.color_count(), 2);
                let (wy, wz) = direct_bipartite_weights(r, n, n1, n2).unwrap();
                let mut expect = vec![wy, wz];
                expect.sort_unstable();
                assert_eq!(
                    res.report
                        .weight_classes
                        .keys()
                        .copied()
                        .collect::<Vec<_>>(),
                    expect
                );
            }
        }
    }
}

fn inner_factors() -> Vec<(Graph, Labeling, SignColoring)> {
    nbc_bases()
        .into_iter()
        .map(|(h, s)| {
            let f = optimal(&h);
            (h, f, s)
        })
        .collect()
}

fn colors(h: &Graph, f: &Labeling) -> usize {
    verify_lda(h, f).unwrap().color_count
}

#[test]
fn lexicographic_regular_and_join() {
    let bases = [
        gen(Cycle(4)),
        gen(Cycle(6)),
        gen(Cycle(8)),
        gen(CompleteMultipartite(vec![3, 3])),
        gen(CompleteMultipartite(vec![4, 4])),
    ];
    for (h, f, s) in inner_factors() {
        let p = colors(&h, &f);
        for g in &bases {
            let r = label_lexi_regular_bipartite(g, &h, &f, &s).unwrap();
            check(&r);
            assert!(r.color_count() <= 2 * p);
            let j = label_lexi_join_k1(g, &h, &f, &s).unwrap();
            check(&j);
            assert!(j.color_count() <= 3 * p);
        }
    }
}

#[test]
fn lexicographic_biregular() {
    let bases = [
        gen(Star(2)),
        gen(Star(3)),
        gen(CompleteMultipartite(vec![2, 3])),
        gen(CompleteMultipartite(vec![2, 4])),
        gen(CompleteMultipartite(vec![3, 5])),
    ];
    for (h, f, s) in inner_factors() {
        let p = colors(&h, &f);
        for g in &bases {
            let r = label_lexi_biregular(g, &h, &f, &s).unwrap();
            check(&r);
            assert!(r.color_count() <= 2 * p);
        }
    }
}

#[test]
fn lexicographic_bistars() {
    let part_lists: [&[usize]; 8] = [
        &[2],
        &[4],
        &[2, 2],
        &[2, 4],
        &[4, 4],
        &[2, 2, 2],
        &[4, 2, 2],
        &[4, 4, 4],
    ];
    for c in 1..=3 {
        for d in 1..=3 {
            for parts in part_lists {
                let k = parts.len();
                let res = label_lexi_bistar(c, d, parts);
                if c == d && k == 1 {
                    assert!(matches!(res, Err(LdaError::UnsupportedCase(_))));
                    continue;
                }
                let r = res.unwrap();
                check(&r);
                assert!(r.color_count() <= 3 * k);
                assert!(r.color_count() > 2 * k, "B{c},{d}{parts:?}");
            }
        }
    }
}

#[test]
fn complete_multipartite() {
    for a in 1..=4 {
        for b in 1..=4 {
            let r = label_complete_multipartite(&[a, b]).unwrap();
            check(&r);
            assert_eq!(r.color_count(), 2);
            for c in 1..=4 {
                let r = label_complete_multipartite(&[a, b, c]).unwrap();
                check(&r);
                assert_eq!(r.color_count(), 3);
            }
        }
    }
}

#[test]
fn magic_rectangles() {
    for rows in 1..=10 {
        for cols in 1..=10 {
            let feasible =
                rows % 2 == cols % 2 && (rows == 1) == (cols == 1) && (rows, cols) != (2, 2);
            match magic_rectangle(rows, cols) {
                Ok(r) => {
                    assert!(feasible, "{rows}x{cols}");
                    assert!(r.is_valid());
                }
                Err(e) => {
                    assert!(!feasible, "{rows}x{cols}: {e}");
                    assert!(matches!(e, LdaError::NoRectangle(_)));
                }
            }
        }
    }
}
