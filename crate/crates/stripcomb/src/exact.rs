//! Arbitrary-precision rational scalars, dense univariate polynomials,
//! reduced rational functions, and bidirectional linear recurrences.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Builds a rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds a rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact binomial coefficient; zero when either parameter is negative or
/// the lower parameter exceeds the upper.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Dense univariate polynomial over the rationals, coefficients by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    /// Creates a polynomial from coefficients (index = degree), trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        UniPoly::constant(rat(1))
    }

    /// A constant polynomial.
    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        UniPoly::new(vec![rat(0), rat(1)])
    }

    /// The monomial c·x^d.
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        UniPoly::new(coeffs)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of x^d (zero beyond the stored range).
    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    /// Borrow of the coefficient slice.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::new(coeffs)
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by x^d.
    pub fn shift_up(&self, d: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly::new(coeffs)
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divmod(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        let dlead = div.leading();
        while !rem.is_zero() && rem.degree() >= div.degree() {
            let d = (rem.degree() - div.degree()) as usize;
            let c = rem.leading() / dlead.clone();
            let term = UniPoly::monomial(c, d);
            quot = quot.add(&term);
            rem = rem.sub(&div.mul(&term));
        }
        Ok((quot, rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            a.scale(&(Rat::one() / lead))
        }
    }

    /// Evaluates the polynomial at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Reversal against a declared degree d: x^d · p(1/x). Requires d ≥ deg p.
    pub fn reverse(&self, d: usize) -> UniPoly {
        assert!(self.degree() <= d as i64, "reversal degree too small");
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        UniPoly::new(coeffs)
    }
}

/// Reduced rational function num/den. The denominator is normalized to have
/// constant coefficient 1 when that coefficient is nonzero, and to be monic
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Builds and normalizes a rational function.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: UniPoly::one() });
        }
        let g = num.gcd(&den);
        let (num, _) = num.divmod(&g)?;
        let (den, _) = den.divmod(&g)?;
        let c0 = den.coeff(0);
        let scale = if c0.is_zero() { den.leading() } else { c0 };
        let inv = Rat::one() / scale;
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    /// Builds a polynomial as a rational function.
    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    /// Numerator (reduced).
    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    /// Denominator (reduced, normalized).
    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// Sum.
    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominator")
    }

    /// Difference.
    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    /// Product.
    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator")
    }

    /// Quotient.
    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// The substitution x -> 1/x, returned as a rational function in x.
    pub fn reciprocal(&self) -> RatFunc {
        let d = self.num.degree().max(self.den.degree()).max(0) as usize;
        RatFunc::new(self.num.reverse(d), self.den.reverse(d)).expect("nonzero denominator")
    }

    /// First `order`+1 Taylor coefficients at 0.
    pub fn series(&self, order: usize) -> Result<Vec<Rat>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::DenominatorVanishesAtZero);
        }
        let mut out: Vec<Rat> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for i in 1..=n {
                let di = self.den.coeff(i);
                if !di.is_zero() {
                    acc -= di * out[n - i].clone();
                }
            }
            out.push(acc / d0.clone());
        }
        Ok(out)
    }
}

/// Constant-coefficient linear recurrence with explicit validity threshold.
///
/// The relation a_n = c_1·a_{n-1} + ... + c_d·a_{n-d} holds whenever the
/// earliest referenced index n-d is at least `valid_from`. When the generating
/// function has equal numerator and denominator degree, the constant term is
/// off by the recorded correction and the sequence is not backward-extendable
/// until `corrected` is applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinRec {
    order: usize,
    coeffs: Vec<Rat>,
    initial: Vec<Rat>,
    valid_from: i64,
    special_const: Option<Rat>,
}

impl LinRec {
    /// Builds a recurrence directly.
    pub fn new(coeffs: Vec<Rat>, initial: Vec<Rat>, valid_from: i64) -> Self {
        let order = coeffs.len();
        assert!(initial.len() >= order, "need at least `order` initial terms");
        LinRec { order, coeffs, initial, valid_from, special_const: None }
    }

    /// Reads a linear recurrence off a reduced proper rational function.
    pub fn from_ratfunc(f: &RatFunc) -> Result<Self> {
        let p = f.num().degree();
        let q = f.den().degree();
        if p > q {
            return Err(Error::NotProper);
        }
        if f.den().coeff(0).is_zero() {
            return Err(Error::DenominatorVanishesAtZero);
        }
        let order = q.max(0) as usize;
        let coeffs: Vec<Rat> = (1..=order).map(|i| -f.den().coeff(i)).collect();
        let special = p == q && p >= 0;
        let (valid_from, correction) = if special {
            let c = f.num().leading() / f.den().leading();
            (1, Some(c))
        } else {
            (0, None)
        };
        let init_len = order + valid_from as usize;
        let initial = f.series(init_len.max(1) - 1)?;
        Ok(LinRec { order, coeffs, initial, valid_from, special_const: correction })
    }

    /// The recurrence order.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The recurrence coefficients c_1..c_d.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Index from which the recurrence is valid.
    pub fn valid_from(&self) -> i64 {
        self.valid_from
    }

    /// True when the constant term does not fit the recurrence.
    pub fn has_special_constant(&self) -> bool {
        self.special_const.is_some()
    }

    /// The correction that must be subtracted from the constant term to make
    /// the sequence bidirectional, when the constant term is special.
    pub fn correction(&self) -> Option<&Rat> {
        self.special_const.as_ref()
    }

    /// Returns the corrected, fully bidirectional recurrence: the constant
    /// term is replaced by its corrected value. Identity when not special.
    pub fn corrected(&self) -> LinRec {
        match &self.special_const {
            None => self.clone(),
            Some(c) => {
                let mut initial = self.initial.clone();
                initial[0] -= c;
                LinRec {
                    order: self.order,
                    coeffs: self.coeffs.clone(),
                    initial,
                    valid_from: 0,
                    special_const: None,
                }
            }
        }
    }

    /// Evaluates the bidirectional extension at an arbitrary index.
    pub fn eval(&self, n: i64) -> Result<Rat> {
        if n >= 0 && (n as usize) < self.initial.len() {
            return Ok(self.initial[n as usize].clone());
        }
        if n >= 0 {
            let mut window: Vec<Rat> = self.initial.clone();
            if self.order == 0 {
                return Ok(Rat::zero());
            }
            for m in window.len()..=(n as usize) {
                let mut acc = Rat::zero();
                for (i, c) in self.coeffs.iter().enumerate() {
                    acc += c * window[m - i - 1].clone();
                }
                window.push(acc);
            }
            return Ok(window[n as usize].clone());
        }
        // Backward extension below index 0.
        if self.special_const.is_some() {
            return Err(Error::NonExtendable(
                "constant term does not satisfy the recurrence; apply corrected() first".into(),
            ));
        }
        if self.order == 0 {
            return Ok(Rat::zero());
        }
        let cd = self.coeffs[self.order - 1].clone();
        if cd.is_zero() {
            return Err(Error::NonExtendable("trailing recurrence coefficient is zero".into()));
        }
        // window holds a_m .. a_{m+order-1} with m decreasing from 0. The
        // relation at index m+order-1 reads
        //   a_{m+order-1} = c_1 a_{m+order-2} + ... + c_{d-1} a_m + c_d a_{m-1},
        // so a_{m-1} = (a_{m+order-1} - sum_{i<d} c_i a_{m+order-1-i}) / c_d.
        let mut window: Vec<Rat> = self.initial[..self.order].to_vec();
        let mut m: i64 = 0;
        while m > n {
            let mut acc = window[self.order - 1].clone();
            for (i, c) in self.coeffs.iter().enumerate().take(self.order - 1) {
                acc -= c * window[self.order - 2 - i].clone();
            }
            let prev = acc / cd.clone();
            window.pop();
            window.insert(0, prev);
            m -= 1;
        }
        Ok(window[0].clone())
    }
}
