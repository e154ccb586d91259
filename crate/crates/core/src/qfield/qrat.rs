//! Exact elements of the field Q(q), stored as normalized ratios of Laurent
//! polynomials.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{laurent_to_poly, poly_to_laurent, Laurent};

/// A rational function in `q` with exact rational coefficients.
///
/// Normal form: numerator and denominator share no polynomial factor, the
/// denominator is an ordinary polynomial (lowest exponent 0) and its constant
/// term is 1. Monomial factors `q^k` live entirely in the numerator, so two
/// equal field elements always compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRat {
    num: Laurent,
    den: Laurent,
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        QRat { num: Laurent::one(), den: Laurent::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QRat { num: Laurent::from_int(n), den: Laurent::one() }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        QRat { num: Laurent::q_pow(k), den: Laurent::one() }
    }

    pub fn from_laurent(num: Laurent) -> Self {
        QRat { num, den: Laurent::one() }
    }

    /// Build `num/den`, normalizing. Panics if `den` is zero.
    pub fn new(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "QRat denominator must be nonzero");
        let mut r = QRat { num, den };
        r.normalize();
        r
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &QRat::one()
    }

    /// True if the element is a Laurent polynomial (denominator 1).
    pub fn is_laurent(&self) -> bool {
        self.den == Laurent::one()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Laurent::one();
            return;
        }
        let (sn, pn) = laurent_to_poly(&self.num);
        let (sd, pd) = laurent_to_poly(&self.den);
        let g = pn.gcd(&pd);
        let (mut pn, mut pd) = if g.deg() > 0 {
            let (qn, rn) = pn.divmod(&g);
            let (qd, rd) = pd.divmod(&g);
            debug_assert!(rn.is_zero() && rd.is_zero());
            (qn, qd)
        } else {
            (pn, pd)
        };
        // make the denominator's constant term 1
        let c = pd.0[0].clone();
        debug_assert!(!c.is_zero());
        for x in &mut pn.0 {
            *x /= &c;
        }
        for x in &mut pd.0 {
            *x /= &c;
        }
        self.num = poly_to_laurent(sn - sd, &pn);
        self.den = poly_to_laurent(0, &pd);
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(q)");
        QRat::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `q -> 1/q` (bar involution on the coefficient field).
    pub fn invert_q(&self) -> Self {
        QRat::new(self.num.invert_q(), self.den.invert_q())
    }

    /// Evaluate at a complex `q` (both parts evaluated; denominator must not
    /// vanish there).
    pub fn eval_complex(&self, q: Complex64) -> Complex64 {
        self.num.eval_complex(q) / self.den.eval_complex(q)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QRat::new(self.num.scale(c), self.den.clone())
    }
}

impl Default for QRat {
    fn default() -> Self {
        QRat::zero()
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        QRat::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        assert!(!rhs.is_zero(), "division by zero in Q(q)");
        QRat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident) => {
        impl $Op for QRat {
            type Output = QRat;
            fn $op(self, rhs: QRat) -> QRat {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&QRat> for QRat {
            type Output = QRat;
            fn $op(self, rhs: &QRat) -> QRat {
                (&self).$op(rhs)
            }
        }
        impl $Op<QRat> for &QRat {
            type Output = QRat;
            fn $op(self, rhs: QRat) -> QRat {
                self.$op(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, rhs: &QRat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, rhs: &QRat) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
