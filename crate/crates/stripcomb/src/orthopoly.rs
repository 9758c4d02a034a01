//! The polynomial sequences underlying all closed-form generating functions:
//! Chebyshev polynomials of the first and second kind, their two formal
//! orthogonal generalizations with coefficient families `B_i` respectively
//! `(A_i, V_i)`, and the three-term Motzkin-case sequence.

use crate::exact::{binomial, rat, Rat, UniPoly};
use crate::multipoly::{Family, Mono, MultiPoly, VarId, XPoly};
use num::One;

/// Chebyshev polynomial of the second kind, with the recurrence extended
/// backwards so that n = -1 gives 0 and n = -2 gives -1.
pub fn chebyshev_u(n: i64) -> UniPoly {
    assert!(n >= -2, "chebyshev_u defined for n >= -2");
    match n {
        -2 => UniPoly::constant(rat(-1)),
        -1 => UniPoly::zero(),
        _ => {
            let two_x = UniPoly::monomial(rat(2), 1);
            let mut prev = UniPoly::zero(); // U_{-1}
            let mut cur = UniPoly::one(); // U_0
            for _ in 0..n {
                let next = two_x.mul(&cur).sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Chebyshev polynomial of the second kind evaluated at x/2, i.e. the monic
/// variant with recurrence p_{n+1} = x p_n - p_{n-1}.
pub fn chebyshev_u_half(n: i64) -> UniPoly {
    assert!(n >= -2);
    match n {
        -2 => UniPoly::constant(rat(-1)),
        -1 => UniPoly::zero(),
        _ => {
            let x = UniPoly::x();
            let mut prev = UniPoly::zero();
            let mut cur = UniPoly::one();
            for _ in 0..n {
                let next = x.mul(&cur).sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// The reversed Chebyshev polynomial x^n · U_n(1/(2x)) = sum_j (-1)^j
/// binom(n-j, j) x^{2j}, a polynomial in x^2 with constant coefficient 1.
pub fn chebyshev_u_rev(n: i64) -> UniPoly {
    assert!(n >= -1);
    if n == -1 {
        return UniPoly::zero();
    }
    let mut coeffs = vec![rat(0); n as usize + 1];
    let mut j = 0;
    while 2 * j <= n {
        let c = Rat::from_integer(binomial(n - j, j));
        coeffs[2 * j as usize] = if j % 2 == 0 { c } else { -c };
        j += 1;
    }
    UniPoly::new(coeffs)
}

/// Chebyshev polynomial of the first kind.
pub fn chebyshev_t(n: u32) -> UniPoly {
    let two_x = UniPoly::monomial(rat(2), 1);
    let mut prev = UniPoly::one(); // T_0
    let mut cur = UniPoly::x(); // T_1
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The monic B-coefficient orthogonal sequence: p_{n+1} = x p_n - B_n p_{n-1}
/// with p_0 = 1 and p_1 = x. All B_i = 1 recovers `chebyshev_u_half`.
pub fn poly_p(n: u32) -> XPoly {
    let x = XPoly::x();
    let mut prev = XPoly::one();
    let mut cur = x.clone();
    if n == 0 {
        return prev;
    }
    for m in 1..n {
        let b = XPoly::constant(MultiPoly::var(VarId::b(m)));
        let next = x.mul(&cur).sub(&b.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// The (A, V)-coefficient orthogonal sequence: q_1 = V_1 x, and
/// q_{n+1} = V_{(n+2)/2} x q_n - q_{n-1} for even n,
/// q_{n+1} = A_{(n+1)/2} x q_n - q_{n-1} for odd n.
pub fn poly_q(n: u32) -> XPoly {
    let x = XPoly::x();
    let mut prev = XPoly::one();
    let mut cur = x.scale(&MultiPoly::var(VarId::v(1)));
    if n == 0 {
        return prev;
    }
    for m in 1..n {
        let c = if m % 2 == 0 {
            MultiPoly::var(VarId::v((m + 2) / 2))
        } else {
            MultiPoly::var(VarId::a((m + 1) / 2))
        };
        let next = x.scale(&c).mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Leading coefficient of `poly_q(n)`: A_1..A_a V_1..V_v with a = floor(n/2)
/// and v = ceil(n/2).
pub fn poly_q_leading(n: u32) -> MultiPoly {
    let a = n / 2;
    let v = n - a;
    let mut pairs = Vec::new();
    for i in 1..=a {
        pairs.push((VarId::a(i), 1));
    }
    for i in 1..=v {
        pairs.push((VarId::v(i), 1));
    }
    MultiPoly::term(Mono::from_pairs(pairs), Rat::one())
}

/// Monic form of `poly_q(n)` (divide by the leading coefficient, a unit).
pub fn poly_q_monic(n: u32) -> XPoly {
    let inv = poly_q_leading(n).invert_unit().expect("leading coefficient is a unit");
    poly_q(n).scale(&inv)
}

/// The Motzkin-case orthogonal sequence p_{n+1} = (x - b_n) p_n - l_n p_{n-1}
/// with p_0 = 1, p_1 = x - b_0. The diagonal coefficients b_i are stored as
/// A_{i+1} (indices from 0) and the l_i as V_i (indices from 1).
pub fn motzkin_p(n: u32) -> XPoly {
    let x = XPoly::x();
    let b = |i: u32| XPoly::constant(MultiPoly::var(VarId::a(i + 1)));
    let l = |i: u32| XPoly::constant(MultiPoly::var(VarId::v(i)));
    let mut prev = XPoly::one();
    let mut cur = x.sub(&b(0));
    if n == 0 {
        return prev;
    }
    for m in 1..n {
        let next = x.sub(&b(m)).mul(&cur).sub(&l(m).mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Lifts a univariate polynomial with rational coefficients into an XPoly.
pub fn lift(p: &UniPoly) -> XPoly {
    XPoly::new(p.coeffs().iter().map(|c| MultiPoly::constant(c.clone())).collect())
}

/// The reversal x^n p(1/x) of an XPoly of degree at most n.
pub fn xrev(p: &XPoly, n: usize) -> XPoly {
    p.reverse(n)
}

/// Shift operator on B indices applied coefficientwise, iterated `n` times.
pub fn tb(p: &XPoly, n: u32) -> XPoly {
    p.shift_vars(&[Family::B], n)
}

/// Shift operator on A and V indices applied coefficientwise.
pub fn tav(p: &XPoly, n: u32) -> XPoly {
    p.shift_vars(&[Family::A, Family::V], n)
}

/// Reflection operator on A/V indices applied coefficientwise.
pub fn rav(p: &XPoly, j: u32) -> XPoly {
    p.reflect_vars(j).expect("reflection indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{spec_b_to_av, spec_ones};

    #[test]
    fn chebyshev_u_basics() {
        assert_eq!(chebyshev_u(0), UniPoly::one());
        assert_eq!(chebyshev_u(1), UniPoly::monomial(rat(2), 1));
        // U_2(x/2) = x^2 - 1.
        assert_eq!(chebyshev_u_half(2), UniPoly::new(vec![rat(-1), rat(0), rat(1)]));
    }

    #[test]
    fn chebyshev_u_explicit_sum() {
        // U_n(x) = sum_j (-1)^j binom(n-j, j) (2x)^{n-2j}.
        for n in 0..=8i64 {
            let mut coeffs = vec![rat(0); n as usize + 1];
            let mut j = 0;
            while 2 * j <= n {
                let c = Rat::from_integer(binomial(n - j, j) * num::BigInt::from(2).pow((n - 2 * j) as u32));
                coeffs[(n - 2 * j) as usize] = if j % 2 == 0 { c } else { -c };
                j += 1;
            }
            assert_eq!(chebyshev_u(n), UniPoly::new(coeffs), "n={n}");
        }
    }

    #[test]
    fn chebyshev_rev_matches_reversal() {
        for n in 0..=10i64 {
            let rev = chebyshev_u_half(n).reverse(n as usize);
            assert_eq!(chebyshev_u_rev(n), rev, "n={n}");
        }
    }

    #[test]
    fn recurrence_residuals_vanish() {
        for n in 1..=30i64 {
            let lhs = UniPoly::monomial(rat(2), 1).mul(&chebyshev_u(n));
            let rhs = chebyshev_u(n + 1).add(&chebyshev_u(n - 1));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn parity() {
        for n in 0..=20u32 {
            for (d, c) in poly_p(n).coeffs().iter().enumerate() {
                if (d as u32 % 2) != (n % 2) {
                    assert!(c.is_zero(), "P_{n} has wrong-parity term x^{d}");
                }
            }
            for (d, c) in poly_q(n).coeffs().iter().enumerate() {
                if (d as u32 % 2) != (n % 2) {
                    assert!(c.is_zero(), "Q_{n} has wrong-parity term x^{d}");
                }
            }
        }
    }

    #[test]
    fn poly_p_all_ones_is_chebyshev() {
        for n in 0..=10u32 {
            let p = poly_p(n).map(&|c| spec_ones(c, &[Family::B]));
            assert_eq!(p, lift(&chebyshev_u_half(n as i64)), "n={n}");
        }
    }

    #[test]
    fn poly_q_leading_and_monic() {
        for n in 0..=9u32 {
            assert_eq!(poly_q(n).leading(), poly_q_leading(n), "n={n}");
        }
        // Monic Q equals P under the inverse-pair substitution.
        for n in 0..=8u32 {
            let lhs = poly_q_monic(n);
            let rhs = poly_p(n).map(&|c| spec_b_to_av(c));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn motzkin_p_small() {
        // p_2 = x^2 - (b_0 + b_1) x + b_0 b_1 - l_1.
        let p2 = motzkin_p(2);
        let b0 = MultiPoly::var(VarId::a(1));
        let b1 = MultiPoly::var(VarId::a(2));
        let l1 = MultiPoly::var(VarId::v(1));
        let expect = XPoly::new(vec![
            b0.mul(&b1).sub(&l1),
            b0.add(&b1).neg(),
            MultiPoly::one(),
        ]);
        assert_eq!(p2, expect);
    }

    #[test]
    fn chebyshev_t_first_kind() {
        assert_eq!(chebyshev_t(0), UniPoly::one());
        assert_eq!(chebyshev_t(1), UniPoly::x());
        // 2 T_n = U_n - U_{n-2}.
        for n in 2..=12u32 {
            let lhs = chebyshev_t(n).scale(&rat(2));
            let rhs = chebyshev_u(n as i64).sub(&chebyshev_u(n as i64 - 2));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}
