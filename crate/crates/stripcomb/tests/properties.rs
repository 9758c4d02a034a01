//! Randomized property suites, one module per library module, exercising the
//! algebraic invariants that the deterministic tests take for granted.

use proptest::prelude::*;

use stripcomb::exact::{rat, LinRec, Rat, RatFunc, UniPoly};
use stripcomb::multipoly::{Mono, MultiPoly, VarId};

fn unipoly_strategy(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 0..=max_len)
        .prop_map(|cs| UniPoly::new(cs.into_iter().map(rat).collect()))
}

fn varid_strategy() -> impl Strategy<Value = VarId> {
    prop_oneof![
        Just(VarId::q()),
        Just(VarId::y()),
        (1u32..=3).prop_map(VarId::a),
        (1u32..=3).prop_map(VarId::v),
        (1u32..=3).prop_map(VarId::b),
    ]
}

fn multipoly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec((varid_strategy(), -2i64..=2), 0..=2), -3i64..=3),
        0..=3,
    )
    .prop_map(|terms| {
        MultiPoly::from_terms(
            terms.into_iter().map(|(pairs, c)| (Mono::from_pairs(pairs), rat(c))),
        )
    })
}

mod exact {
    use super::*;

    proptest! {
        #[test]
        fn unipoly_ring_laws(
            a in unipoly_strategy(6),
            b in unipoly_strategy(6),
            c in unipoly_strategy(6),
        ) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn unipoly_divmod(a in unipoly_strategy(7), b in unipoly_strategy(5)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }

        #[test]
        fn unipoly_gcd_divides(a in unipoly_strategy(6), b in unipoly_strategy(6)) {
            let g = a.gcd(&b);
            if g.is_zero() {
                prop_assert!(a.is_zero() && b.is_zero());
            } else {
                prop_assert!(a.divmod(&g).unwrap().1.is_zero());
                prop_assert!(b.divmod(&g).unwrap().1.is_zero());
            }
        }

        #[test]
        fn ratfunc_series_is_additive(
            n1 in unipoly_strategy(4),
            n2 in unipoly_strategy(4),
            d1 in unipoly_strategy(3),
            d2 in unipoly_strategy(3),
        ) {
            // Denominators with constant term 1 keep everything expandable.
            let d1 = UniPoly::one().add(&d1.shift_up(1));
            let d2 = UniPoly::one().add(&d2.shift_up(1));
            let f = RatFunc::new(n1, d1).unwrap();
            let g = RatFunc::new(n2, d2).unwrap();
            let fs = f.series(12).unwrap();
            let gs = g.series(12).unwrap();
            let sums = f.add(&g).series(12).unwrap();
            for i in 0..=12 {
                prop_assert_eq!(&fs[i] + &gs[i], sums[i].clone());
            }
        }

        #[test]
        fn linear_recurrence_reproduces_series(
            num in unipoly_strategy(3),
            den in unipoly_strategy(4),
        ) {
            let den = UniPoly::one().add(&den.shift_up(1));
            prop_assume!(num.is_zero() || num.degree() < den.degree());
            let f = RatFunc::new(num, den).unwrap();
            prop_assume!(!f.num().is_zero() && f.num().degree() < f.den().degree());
            let rec = LinRec::from_ratfunc(&f).unwrap();
            prop_assert!(!rec.has_special_constant());
            let ser = f.series(12).unwrap();
            for n in 0..=12i64 {
                prop_assert_eq!(rec.eval(n).unwrap(), ser[n as usize].clone());
            }
        }
    }
}

mod multipoly {
    use super::*;

    proptest! {
        #[test]
        fn ring_laws(
            a in multipoly_strategy(),
            b in multipoly_strategy(),
            c in multipoly_strategy(),
        ) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), MultiPoly::zero());
        }

        #[test]
        fn all_ones_evaluation_is_a_homomorphism(
            a in multipoly_strategy(),
            b in multipoly_strategy(),
        ) {
            prop_assert_eq!(a.add(&b).eval_all_ones(), a.eval_all_ones() + b.eval_all_ones());
            prop_assert_eq!(a.mul(&b).eval_all_ones(), a.eval_all_ones() * b.eval_all_ones());
        }

        #[test]
        fn unit_powers_compose(
            pairs in prop::collection::vec((varid_strategy(), -2i64..=2), 1..=3),
            c in prop_oneof![Just(1i64), Just(-1), Just(2)],
            e1 in -4i64..=4,
            e2 in -4i64..=4,
        ) {
            let u = MultiPoly::term(Mono::from_pairs(pairs), rat(c));
            let lhs = u.unit_pow(e1).unwrap().mul(&u.unit_pow(e2).unwrap());
            prop_assert_eq!(lhs, u.unit_pow(e1 + e2).unwrap());
            prop_assert_eq!(u.invert_unit().unwrap().mul(&u), MultiPoly::one());
        }

        #[test]
        fn reflection_is_an_involution(
            terms in prop::collection::vec(
                (prop::collection::vec(
                    (prop_oneof![(1u32..=3).prop_map(VarId::a), (1u32..=3).prop_map(VarId::v)], -2i64..=2),
                    0..=2,
                ), -3i64..=3),
                0..=3,
            ),
        ) {
            let p = MultiPoly::from_terms(
                terms.into_iter().map(|(pairs, c)| (Mono::from_pairs(pairs), rat(c))),
            );
            prop_assert_eq!(p.reflect(3).unwrap().reflect(3).unwrap(), p);
        }
    }
}

mod orthopoly {
    use super::*;
    use stripcomb::orthopoly::{chebyshev_t, chebyshev_u, chebyshev_u_half};

    proptest! {
        #[test]
        fn second_kind_determinant_identity(n in 0i64..=25) {
            // U_{n+1} U_{n-1} = U_n^2 - 1.
            let lhs = chebyshev_u(n + 1).mul(&chebyshev_u(n - 1));
            let rhs = chebyshev_u(n).mul(&chebyshev_u(n)).sub(&UniPoly::one());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn half_argument_agrees_with_standard(n in 0i64..=20, p in -6i64..=6, q in 1i64..=4) {
            let t = rat(p) / rat(q);
            let double = &t + &t;
            prop_assert_eq!(chebyshev_u_half(n).eval(&double), chebyshev_u(n).eval(&t));
        }

        #[test]
        fn first_kind_from_second_kind(n in 2u32..=20) {
            // 2 T_n = U_n - U_{n-2}.
            let lhs = chebyshev_t(n).scale(&rat(2));
            let rhs = chebyshev_u(n as i64).sub(&chebyshev_u(n as i64 - 2));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

mod paths {
    use super::*;
    use stripcomb::paths::{
        count_paths, enumerate_paths, weighted_path_poly, WeightScheme,
    };

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn counts_match_enumeration_and_reversal(
            n in 0u64..=8,
            k in 1i64..=4,
            r in 0i64..=4,
            s in 0i64..=4,
        ) {
            prop_assume!(r <= k && s <= k);
            let count = count_paths(n, k, r, s).unwrap();
            prop_assert_eq!(&count, &count_paths(n, k, s, r).unwrap());
            let listed = enumerate_paths(n, k, r, s, false).unwrap();
            prop_assert_eq!(Rat::from_integer(count.clone()), rat(listed.len() as i64));
            // Growing the height bound never loses paths.
            prop_assert!(count <= count_paths(n, k + 1, r, s).unwrap());
        }

        #[test]
        fn weights_specialize_to_counts(
            n in 0u64..=8,
            k in 1i64..=3,
            r in 0i64..=3,
            s in 0i64..=3,
        ) {
            prop_assume!(r <= k && s <= k);
            let count = Rat::from_integer(count_paths(n, k, r, s).unwrap());
            for scheme in [WeightScheme::BScheme, WeightScheme::BavScheme, WeightScheme::QArea] {
                let w = weighted_path_poly(n, k, r, s, scheme).unwrap();
                prop_assert_eq!(w.eval_all_ones(), count.clone());
            }
        }
    }
}

mod altseq {
    use super::*;
    use stripcomb::altseq::{count_all, count_altseq, enumerate_altseq, weighted_altseq_poly};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn counts_match_enumeration(
            n in 1u64..=7,
            k in 1i64..=4,
            r in 1i64..=4,
            s in 1i64..=4,
        ) {
            prop_assume!(r <= k && s <= k);
            let count = count_altseq(n, k, r, s).unwrap();
            let listed = enumerate_altseq(n, k, r, s).unwrap();
            prop_assert_eq!(Rat::from_integer(count), rat(listed.len() as i64));
            let w = weighted_altseq_poly(n, k, r, s).unwrap();
            let direct = listed.iter().fold(MultiPoly::zero(), |acc, a| acc.add(&a.weight()));
            prop_assert_eq!(w, direct);
        }

        #[test]
        fn totals_sum_over_endpoints(n in 1i64..=7, k in 1i64..=4) {
            let mut total = rat(0);
            for r in 1..=k {
                for s in 1..=k {
                    total += Rat::from_integer(count_altseq(n as u64, k, r, s).unwrap());
                }
            }
            prop_assert_eq!(total, Rat::from_integer(count_all(n, k).unwrap()));
        }
    }
}

mod heaps {
    use super::*;
    use stripcomb::exact::binomial;
    use stripcomb::heaps::{
        altseq_to_segment_heap, dimer_heap_to_path, path_to_dimer_heap, q_binomial,
        segment_heap_to_altseq,
    };
    use stripcomb::altseq::enumerate_altseq;
    use stripcomb::paths::enumerate_paths;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dimer_bijection_round_trips(
            n in 0u64..=8,
            k in 0i64..=4,
            r in 0i64..=4,
            s in 0i64..=4,
            pick in 0usize..1000,
        ) {
            prop_assume!(r <= s && s <= k && (n as i64 + r + s) % 2 == 0);
            let paths = enumerate_paths(n, k, r, s, false).unwrap();
            prop_assume!(!paths.is_empty());
            let p = &paths[pick % paths.len()];
            let h = path_to_dimer_heap(p, k, r, s).unwrap();
            prop_assert_eq!(&dimer_heap_to_path(&h, k, r, s).unwrap(), p);
        }

        #[test]
        fn segment_bijection_round_trips(
            half in 0u64..=3,
            k in 1i64..=4,
            r in 1i64..=4,
            s in 1i64..=4,
            pick in 0usize..1000,
        ) {
            prop_assume!(r <= k && s <= k);
            let seqs = enumerate_altseq(2 * half + 1, k, r, s).unwrap();
            prop_assume!(!seqs.is_empty());
            let a = &seqs[pick % seqs.len()];
            let mh = altseq_to_segment_heap(a, k).unwrap();
            prop_assert_eq!(mh.weight(), a.weight());
            prop_assert_eq!(&segment_heap_to_altseq(&mh).unwrap(), a);
        }

        #[test]
        fn gaussian_binomials_specialize_and_reflect(n in 0i64..=8, k in -1i64..=9) {
            let g = q_binomial(n, k);
            prop_assert_eq!(g.eval_all_ones(), Rat::from_integer(
                if (0..=n).contains(&k) { binomial(n, k) } else { 0.into() }
            ));
            prop_assert_eq!(g, q_binomial(n, n - k));
        }
    }
}

mod tableaux {
    use super::*;
    use stripcomb::tableaux::{
        count_alt_tableaux, enumerate_alt_tableaux, weighted_alt_tableaux, Flags, TableauShape,
    };

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn counts_match_enumeration(
            l in 1i64..=6,
            u in prop_oneof![Just(0i64), Just(2)],
            k in 1i64..=3,
            flagged in any::<bool>(),
            f in 1i64..=3,
            g in 1i64..=3,
        ) {
            prop_assume!(u < l);
            let shape = TableauShape::new(vec![l], vec![u]).unwrap();
            let flags = if flagged { Some(Flags { first: vec![f], last: vec![g] }) } else { None };
            let listed = enumerate_alt_tableaux(&shape, k, flags.as_ref()).unwrap();
            let count = count_alt_tableaux(&shape, k, flags.as_ref()).unwrap();
            prop_assert_eq!(Rat::from_integer(count), rat(listed.len() as i64));
            let w = weighted_alt_tableaux(&shape, k, flags.as_ref()).unwrap();
            let direct = listed.iter().fold(MultiPoly::zero(), |acc, t| acc.add(&t.weight()));
            prop_assert_eq!(w, direct);
        }
    }
}

mod determinants {
    use super::*;
    use stripcomb::determinants::{det_exact, det_poly};

    fn rat_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rat>>> {
        prop::collection::vec(prop::collection::vec((-5i64..=5).prop_map(rat), n), n)
    }

    proptest! {
        #[test]
        fn transpose_swap_and_scaling(m in rat_matrix(3), c in -3i64..=3) {
            let d = det_exact(&m).unwrap();
            // Transpose invariance.
            let t: Vec<Vec<Rat>> = (0..3).map(|i| (0..3).map(|j| m[j][i].clone()).collect()).collect();
            prop_assert_eq!(det_exact(&t).unwrap(), d.clone());
            // Swapping two rows flips the sign.
            let swapped = vec![m[1].clone(), m[0].clone(), m[2].clone()];
            prop_assert_eq!(det_exact(&swapped).unwrap(), -d.clone());
            // Scaling one row scales the determinant.
            let mut scaled = m.clone();
            for x in &mut scaled[2] {
                *x *= rat(c);
            }
            prop_assert_eq!(det_exact(&scaled).unwrap(), d.clone() * rat(c));
            // The polynomial-ring determinant agrees on constant matrices.
            let lifted: Vec<Vec<MultiPoly>> = m
                .iter()
                .map(|row| row.iter().map(|x| MultiPoly::constant(x.clone())).collect())
                .collect();
            prop_assert_eq!(det_poly(&lifted).unwrap(), MultiPoly::constant(d));
        }

        #[test]
        fn multilinearity_in_a_row(
            m in rat_matrix(3),
            extra in prop::collection::vec((-5i64..=5).prop_map(rat), 3),
        ) {
            let mut added = m.clone();
            for (x, e) in added[0].iter_mut().zip(&extra) {
                *x += e.clone();
            }
            let mut replaced = m.clone();
            replaced[0] = extra;
            prop_assert_eq!(
                det_exact(&added).unwrap(),
                det_exact(&m).unwrap() + det_exact(&replaced).unwrap()
            );
        }
    }
}

mod verify {
    use super::*;
    use stripcomb::verify::{params_of, run_check};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn certificates_are_reproducible(n in 0i64..=6, k in 1i64..=3, r in 0i64..=3, s in 0i64..=3) {
            prop_assume!(r <= k && s <= k);
            let p = params_of(&[("n", n), ("k", k), ("r", r), ("s", s)]);
            let a = run_check("dyck-gf", &p).unwrap();
            let b = run_check("dyck-gf", &p).unwrap();
            prop_assert!(a.verdict);
            prop_assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs));
        }
    }
}
