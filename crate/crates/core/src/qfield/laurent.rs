//! Laurent polynomials in the formal variable `q` with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_k q^k`, `k` ranging over a finite set of
/// integers (possibly negative). Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i64, BigRational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Laurent::monomial(0, BigRational::one())
    }

    /// The monomial `c * q^k`.
    pub fn monomial(k: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Laurent { coeffs }
    }

    /// `q^k` with integer coefficient 1.
    pub fn q_pow(k: i64) -> Self {
        Laurent::monomial(k, BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Laurent::monomial(0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lowest exponent present, or None for the zero polynomial.
    pub fn min_deg(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent present, or None for the zero polynomial.
    pub fn max_deg(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn insert(&mut self, k: i64, c: BigRational) {
        if !c.is_zero() {
            self.coeffs.insert(k, c);
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// Multiply every coefficient by the rational `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            coeffs: self.coeffs.iter().map(|(&d, a)| (d, a * c)).collect(),
        }
    }

    /// Substitute `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&d, c)| (-d, c.clone())).collect(),
        }
    }

    /// Evaluate at a complex point (used to cross-check exact results
    /// against floating-point computations).
    pub fn eval_complex(&self, q: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&k, c) in &self.coeffs {
            let cf = Complex64::new(rational_to_f64(c), 0.0);
            acc += cf * q.powi(k as i32);
        }
        acc
    }

    /// True if every exponent is >= 1 and every coefficient is an integer:
    /// membership in `q Z[q]` (used by the crystal-normalization check).
    pub fn in_q_zpoly(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&k, c)| k >= 1 && c.denom().is_one())
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    // Good enough for the desk-scale coefficients arising here.
    let n = r.numer();
    let d = r.denom();
    let nf = approx_bigint(n);
    let df = approx_bigint(d);
    nf / df
}

fn approx_bigint(n: &BigInt) -> f64 {
    let s = n.to_string();
    s.parse::<f64>().unwrap_or(f64::NAN)
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            let cur = out.coeff(k) + c;
            out.coeffs.remove(&k);
            out.insert(k, cur);
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            let cur = out.coeff(k) - c;
            out.coeffs.remove(&k);
            out.insert(k, cur);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (&ka, ca) in &self.coeffs {
            for (&kb, cb) in &rhs.coeffs {
                let e = coeffs.entry(ka + kb).or_insert_with(BigRational::zero);
                *e += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Laurent { coeffs }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for Laurent {
            type Output = Laurent;
            fn $op(self, rhs: Laurent) -> Laurent {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&Laurent> for Laurent {
            type Output = Laurent;
            fn $op(self, rhs: &Laurent) -> Laurent {
                (&self).$op(rhs)
            }
        }
        impl $OpAssign<&Laurent> for Laurent {
            fn $op_assign(&mut self, rhs: &Laurent) {
                *self = (&*self).$op(rhs);
            }
        }
    };
}

forward_owned!(Add, add, AddAssign, add_assign);
forward_owned!(Sub, sub, SubAssign, sub_assign);
forward_owned!(Mul, mul, MulAssign, mul_assign);

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

// ---- ordinary-polynomial helpers for gcd / division --------------------

/// Dense ordinary polynomial over Q, used internally for gcd and exact
/// division; index = degree.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Poly(pub Vec<BigRational>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn monic(mut self) -> Self {
        if self.is_zero() {
            return self;
        }
        let l = self.lead().clone();
        for c in &mut self.0 {
            *c /= &l;
        }
        self
    }

    /// Polynomial division, returning (quotient, remainder).
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        if rem.is_zero() || rem.deg() < d.deg() {
            return (Poly(vec![]), rem);
        }
        let mut quot = vec![BigRational::zero(); rem.deg() - d.deg() + 1];
        while !rem.is_zero() && rem.deg() >= d.deg() {
            let shift = rem.deg() - d.deg();
            let factor = rem.lead() / d.lead();
            for (i, c) in d.0.iter().enumerate() {
                let idx = i + shift;
                let v = &rem.0[idx] - c * &factor;
                rem.0[idx] = v;
            }
            quot[shift] = factor;
            rem = rem.trim();
        }
        (Poly(quot).trim(), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone().trim();
        let mut b = other.clone().trim();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Split a nonzero Laurent polynomial into `(shift, ordinary poly)` with the
/// poly having a nonzero constant term: `self = q^shift * poly`.
pub(crate) fn laurent_to_poly(l: &Laurent) -> (i64, Poly) {
    let lo = l.min_deg().expect("zero laurent has no poly form");
    let hi = l.max_deg().unwrap();
    let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
    for (&k, c) in l.iter() {
        v[(k - lo) as usize] = c.clone();
    }
    (lo, Poly(v))
}

pub(crate) fn poly_to_laurent(shift: i64, p: &Poly) -> Laurent {
    let mut out = Laurent::zero();
    for (i, c) in p.0.iter().enumerate() {
        if !c.is_zero() {
            out.insert(shift + i as i64, c.clone());
        }
    }
    out
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest power first
        for (&k, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                if abs.denom().is_one() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "{}/{}", abs.numer(), abs.denom())?;
                }
            }
            if k != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", k)?;
                }
            }
        }
        Ok(())
    }
}
