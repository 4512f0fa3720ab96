//! Independent oracles and random generators shared by the integration tests.
//! Nothing here calls into the algorithms it is used to check.

#![allow(dead_code)]

use cstar_core::{DpdPair, Point, QDivisor, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(big(n), big(d))
}

/// Determinant by fraction-free elimination.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of all `k×k` minors (the `k`-th determinantal divisor).
pub fn determinantal_divisor(m: &[Vec<BigInt>], k: usize) -> BigInt {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    if k == 0 {
        return BigInt::one();
    }
    if k > rows || k > cols {
        return BigInt::zero();
    }
    let mut g = BigInt::zero();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            g = g.gcd(&bareiss_det(&sub));
        }
    }
    g
}

/// Whether the rows of `m` generate all of `Zⁿ`, `n` = number of columns.
pub fn rows_span_lattice(m: &[Vec<BigInt>], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    determinantal_divisor(m, n).is_one()
}

fn det2(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

/// Brute-force minimal generators of the lattice points of `C(r1, r2)`,
/// ordered from `r1` to `r2`.
pub fn cone_hilbert_basis(r1: (i64, i64), r2: (i64, i64)) -> Vec<(i64, i64)> {
    let det = det2(r1, r2);
    assert!(det != 0);
    let s = det.signum();
    // p = x·r1 + y·r2 with x = det(p, r2)/det, y = det(r1, p)/det
    let inside = |p: (i64, i64)| det2(p, r2) * s >= 0 && det2(r1, p) * s >= 0;
    let xs = [0, r1.0, r2.0, r1.0 + r2.0];
    let ys = [0, r1.1, r2.1, r1.1 + r2.1];
    let (x0, x1) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y0, y1) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let in_box = |p: (i64, i64)| {
        let a = det2(p, r2) * s;
        let b = det2(r1, p) * s;
        a >= 0 && b >= 0 && a <= det.abs() && b <= det.abs()
    };
    let mut pts = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            if (x, y) != (0, 0) && in_box((x, y)) {
                pts.push((x, y));
            }
        }
    }
    let mut basis: Vec<(i64, i64)> = pts
        .iter()
        .copied()
        .filter(|&p| {
            !pts.iter().any(|&o| {
                let rest = (p.0 - o.0, p.1 - o.1);
                o != p && rest != (0, 0) && inside(rest)
            })
        })
        .collect();
    basis.sort_by(|a, b| 0.cmp(&(det2(*a, *b) * s)));
    basis
}

/// Type `(d, e)` of the cone read off its Hilbert basis: consecutive
/// generators satisfy `h_{i-1} + h_{i+1} = bᵢ·hᵢ` and `[b₁, …, bₛ] = d/(d-e)`.
pub fn cone_type_oracle(r1: (i64, i64), r2: (i64, i64)) -> (i64, i64) {
    let d = det2(r1, r2).abs();
    let h = cone_hilbert_basis(r1, r2);
    assert_eq!(h.first(), Some(&r1));
    assert_eq!(h.last(), Some(&r2));
    if h.len() == 2 {
        assert_eq!(d, 1);
        return (1, 0);
    }
    let mut bs = Vec::new();
    for w in h.windows(3) {
        let sum = (w[0].0 + w[2].0, w[0].1 + w[2].1);
        let b = if w[1].0 != 0 {
            sum.0 / w[1].0
        } else {
            sum.1 / w[1].1
        };
        assert_eq!((b * w[1].0, b * w[1].1), sum);
        bs.push(b);
    }
    let mut value = Rat::from_integer(big(*bs.last().unwrap()));
    for &b in bs.iter().rev().skip(1) {
        value = Rat::from_integer(big(b)) - value.recip();
    }
    assert_eq!(value.numer(), &big(d));
    let qd: i64 = value.denom().try_into().unwrap();
    (d, (d - qd).rem_euclid(d))
}

pub fn random_rat(rng: &mut StdRng, max_den: i64, max_abs_num: i64) -> Rat {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-max_abs_num..=max_abs_num);
    q(num, den)
}

/// Distinct small rational points.
pub fn random_points(rng: &mut StdRng, n: usize) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::new();
    while pts.len() < n {
        let p = Point::new(q(rng.gen_range(-6..=6), rng.gen_range(1..=3)));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts.sort();
    pts
}

/// Random valid pair: at each point pick `D₊(a)` freely and
/// `D₋(a) = -D₊(a) - s` with `s ≥ 0`.
pub fn random_pair(rng: &mut StdRng, max_points: usize, max_den: i64) -> DpdPair {
    let n = rng.gen_range(0..=max_points);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for p in random_points(rng, n) {
        let x = random_rat(rng, max_den, 3 * max_den);
        let gap = if rng.gen_bool(0.4) {
            Rat::zero()
        } else {
            q(rng.gen_range(1..=2 * max_den), rng.gen_range(1..=max_den))
        };
        minus.push((p.clone(), -&x - gap));
        plus.push((p, x));
    }
    DpdPair::new(QDivisor::from_entries(plus), QDivisor::from_entries(minus)).unwrap()
}

/// `(e₊, m₊, e₋, m₋)` at a point.
pub type LocalIntegers = (BigInt, BigInt, BigInt, BigInt);

/// Test-side reading of the local integers at a point.
pub fn local_integers(pair: &DpdPair, p: &Point) -> LocalIntegers {
    let a = pair.d_plus().value_at(p);
    let b = pair.d_minus().value_at(p);
    (-a.numer(), a.denom().clone(), -b.numer(), -b.denom())
}

/// Class group relations built directly from the divisor values of the
/// canonical representative `(frac D₊, D₋ + ⌊D₊⌋)`, computed here by hand.
pub fn class_group_relations(
    pair: &DpdPair,
) -> (usize, Vec<Vec<BigInt>>, Vec<BigInt>, Vec<LocalIntegers>) {
    let mut pts = pair.d_plus().support();
    pts.extend(pair.d_minus().support());
    pts.sort();
    pts.dedup();
    let mut ones = Vec::new();
    let mut fixed = Vec::new();
    for p in &pts {
        let a = pair.d_plus().value_at(p);
        let b = pair.d_minus().value_at(p);
        let fa = &a - a.floor();
        let fb = &b + a.floor();
        let sum = &a + &b;
        let (ep, mp) = (-fa.numer(), fa.denom().clone());
        let (em, mm) = (-fb.numer(), -fb.denom());
        if sum.is_negative() {
            fixed.push((ep, mp, em, mm));
        } else if !fa.is_zero() {
            ones.push((ep, mp));
        }
    }
    let n = ones.len() + 2 * fixed.len();
    let mut rows = Vec::new();
    let mut last = vec![BigInt::zero(); n];
    for (i, (e, m)) in ones.iter().enumerate() {
        let mut r = vec![BigInt::zero(); n];
        r[i] = m.clone();
        rows.push(r);
        last[i] = e.clone();
    }
    for (j, (ep, mp, em, mm)) in fixed.iter().enumerate() {
        let c = ones.len() + 2 * j;
        let mut r = vec![BigInt::zero(); n];
        r[c] = mp.clone();
        r[c + 1] = -mm;
        rows.push(r);
        last[c] = ep.clone();
        last[c + 1] = -em;
    }
    rows.push(last);
    let ms = ones.iter().map(|(_, m)| m.clone()).collect();
    (n, rows, ms, fixed)
}
