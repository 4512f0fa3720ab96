mod common;

use common::{big, q};
use cstar_core::hyperbolic::{
    canonical_divisor, defining_equations, dpd_from_generators, orbit_table, FiberKind,
};
use cstar_core::parabolic::graded_piece;
use cstar_core::{
    canonical_pair, function_from_divisor, group_from_presentation, pairs_equivalent, DpdPair,
    IntMatrix, Point, QDivisor, Rat,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Point::new(q(n, d)))
}

fn rat(max_den: i64) -> impl Strategy<Value = Rat> {
    (-3 * max_den..=3 * max_den, 1..=max_den).prop_map(|(n, d)| q(n, d))
}

fn divisor() -> impl Strategy<Value = QDivisor> {
    prop::collection::vec((point(), rat(8)), 0..5).prop_map(QDivisor::from_entries)
}

fn pair() -> impl Strategy<Value = DpdPair> {
    let gap = prop_oneof![
        Just(Rat::zero()),
        (1i64..=12, 1i64..=6).prop_map(|(n, d)| q(n, d))
    ];
    prop::collection::btree_map(point(), (rat(8), gap), 0..5).prop_map(|m| {
        let plus = m.iter().map(|(p, (x, _))| (p.clone(), x.clone()));
        let minus = m.iter().map(|(p, (x, g))| (p.clone(), -x - g));
        DpdPair::new(QDivisor::from_entries(plus), QDivisor::from_entries(minus)).unwrap()
    })
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        (
            Just(c),
            prop::collection::vec(prop::collection::vec(-8i64..=8, c), r),
        )
    })
}

proptest! {
    #[test]
    fn floor_and_frac_split_a_divisor(d in divisor()) {
        let (fl, fr) = (d.floor(), d.frac());
        prop_assert_eq!(&(&fl + &fr), &d);
        prop_assert!(fl.is_integral());
        for (_, c) in fr.iter() {
            prop_assert!(!c.is_negative() && c < &Rat::one());
        }
        prop_assert_eq!(d.ceil(), -&(-&d).floor());
    }

    #[test]
    fn denominator_is_least_clearing_factor(d in divisor()) {
        let n = d.denominator();
        prop_assert!(d.scale_int(&n).is_integral());
        let mut k = BigInt::one();
        while k < n {
            if n.is_multiple_of(&k) {
                prop_assert!(!d.scale_int(&k).is_integral());
            }
            k += 1;
        }
    }

    #[test]
    fn integral_divisor_is_a_principal_divisor(d in divisor()) {
        let f = function_from_divisor(&d.floor()).unwrap();
        prop_assert_eq!(f.divisor(), d.floor());
        prop_assert!(function_from_divisor(&d).is_err() || d.is_integral());
    }

    #[test]
    fn canonical_form_is_an_idempotent_representative(a in pair()) {
        let c = canonical_pair(&a);
        prop_assert_eq!(canonical_pair(&c), c.clone());
        prop_assert!(pairs_equivalent(&a, &c));
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.sum(), a.sum());
        for (_, v) in c.d_plus().iter() {
            prop_assert!(!v.is_negative() && v < &Rat::one());
        }
    }

    #[test]
    fn equivalence_ignores_integral_shifts(a in pair(), pts in prop::collection::vec((point(), -3i64..=3), 0..3)) {
        let shift = QDivisor::from_entries(pts.into_iter().map(|(p, n)| (p, q(n, 1))));
        let b = a.shifted(&shift).unwrap();
        prop_assert!(pairs_equivalent(&a, &b));
        prop_assert_eq!(canonical_pair(&a), canonical_pair(&b));
    }

    #[test]
    fn invariants_survive_unimodular_row_and_column_moves(
        (cols, rows) in small_matrix(),
        factor in -5i64..=5,
        pick in any::<(usize, usize, usize, usize)>(),
    ) {
        let m = IntMatrix::from_rows(cols, &rows).unwrap();
        let g = group_from_presentation(cols, &m).unwrap();

        let mut moved = rows.clone();
        let (i, j) = (pick.0 % rows.len(), pick.1 % rows.len());
        if i != j {
            let src = moved[j].clone();
            for (x, y) in moved[i].iter_mut().zip(src) {
                *x += factor * y;
            }
        }
        let (a, b) = (pick.2 % cols, pick.3 % cols);
        if a != b {
            for r in moved.iter_mut() {
                r[a] += factor * r[b];
            }
        }
        moved.swap(0, i);
        let m2 = IntMatrix::from_rows(cols, &moved).unwrap();
        prop_assert_eq!(group_from_presentation(cols, &m2).unwrap(), g);
    }

    #[test]
    fn graded_pieces_multiply_into_higher_degrees(d in divisor(), n in 0u64..8, m in 0u64..8) {
        let prod = graded_piece(&d, n).mul(&graded_piece(&d, m));
        let quotient = prod.div(&graded_piece(&d, n + m));
        prop_assert!(quotient.is_polynomial());
        if d.scale_int(&big(n as i64)).is_integral() {
            prop_assert_eq!(graded_piece(&d, 2 * n), graded_piece(&d, n).pow(&big(2)));
        }
    }

    #[test]
    fn orbit_weights_are_units_modulo_the_stabilizer(a in pair()) {
        for fiber in orbit_table(&a) {
            let v = a.d_plus().value_at(&fiber.point);
            let expected = if fiber.kind == FiberKind::TwoOrbitsWithFixedPoint { 2 } else { 1 };
            prop_assert_eq!(fiber.orbits.len(), expected);
            for o in &fiber.orbits {
                let (d, wt) = (&o.orbit_type.d, &o.orbit_type.q);
                prop_assert!(d.is_positive());
                prop_assert!(!wt.is_negative() && wt < d);
                prop_assert!(wt.gcd(d).is_one() || d.is_one());
                prop_assert_eq!(&o.multiplicity, d);
            }
            // first orbit: q·e ≡ -1 mod m for D₊(a) = -e/m
            let first = &fiber.orbits[0];
            let e: BigInt = -v.numer();
            prop_assert_eq!(first.orbit_type.d.clone(), v.denom().clone());
            prop_assert!((&first.orbit_type.q * &e + BigInt::one()).mod_floor(v.denom()).is_zero());
        }
    }

    #[test]
    fn canonical_divisor_vanishes_exactly_on_reduced_orbits(a in pair()) {
        let kv = canonical_divisor(&a);
        let table = orbit_table(&canonical_pair(&a));
        for term in &kv.terms {
            let orbit = table.iter().flat_map(|f| f.orbits.iter()).find(|o| o.label == term.orbit);
            let orbit = orbit.expect("every term names an orbit");
            prop_assert_eq!(term.coeff.is_zero(), orbit.multiplicity.is_one());
            prop_assert_eq!(&term.coeff, &(&orbit.multiplicity - 1));
        }
    }

    #[test]
    fn generators_recover_the_pair(a in pair()) {
        let (neg, pos) = defining_equations(&a).generators();
        let back = dpd_from_generators(&neg, &pos).unwrap();
        prop_assert!(pairs_equivalent(&back, &a));
    }
}
