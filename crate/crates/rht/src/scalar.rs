//! Exact scalars: rationals and Gaussian rationals.
//!
//! A [`Scalar`] is either a `BigRational` or a pair (re, im) with im != 0; a Gaussian
//! value whose imaginary part cancels to zero is renormalized to the `Rational`
//! variant on construction, so structural equality is field equality and the two
//! variants never alias the same number. Fractions are kept in lowest terms with
//! positive denominators by `Ratio`.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// re + im*i with im != 0.
    Gaussian(BigRational, BigRational),
}

/// Which field a computation is running over. `Qi` admits `i` in inputs; plain
/// rational data embeds into it unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Field {
    Q,
    Qi,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn i() -> Self {
        Scalar::Gaussian(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// num/den as an exact fraction. Panics on den = 0.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// re + im*i, normalizing to the rational variant when im = 0.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        if im.is_zero() {
            Scalar::Rational(re)
        } else {
            Scalar::Gaussian(re, im)
        }
    }

    pub fn gaussian_int(re: i64, im: i64) -> Self {
        Scalar::gaussian(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn re(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r.clone(),
            Scalar::Gaussian(re, _) => re.clone(),
        }
    }

    pub fn im(&self) -> BigRational {
        match self {
            Scalar::Rational(_) => BigRational::zero(),
            Scalar::Gaussian(_, im) => im.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.clone()),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(re.clone(), -im.clone()),
        }
    }

    /// |z|^2 = re^2 + im^2, a rational.
    pub fn norm_sq(&self) -> BigRational {
        let re = self.re();
        let im = self.im();
        &re * &re + &im * &im
    }

    /// Multiplicative inverse. Panics on zero; callers divide only by pivots
    /// already known nonzero.
    pub fn inverse(&self) -> Self {
        match self {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rational(r.recip())
            }
            Scalar::Gaussian(re, im) => {
                let n = self.norm_sq();
                Scalar::gaussian(re / &n, -(im / &n))
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::gaussian(self.re() + rhs.re(), self.im() + rhs.im())
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::gaussian(self.re() - rhs.re(), self.im() - rhs.im())
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // fast path: both rational
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (self, rhs) {
            return Scalar::Rational(a * b);
        }
        let (a, b) = (self.re(), self.im());
        let (c, d) = (rhs.re(), rhs.im());
        Scalar::gaussian(&a * &c - &b * &d, &a * &d + &b * &c)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inverse()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r.clone()),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(-re.clone(), -im.clone()),
        }
    }
}

macro_rules! owned_ops {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar { $t::$f(&self, &rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders the imaginary part with a trailing `i`: 1 -> "i", -1 -> "-i", 2/3 -> "2/3i".
fn fmt_imag(im: &BigRational) -> String {
    if im.is_one() {
        "i".into()
    } else if (-im).is_one() {
        "-i".into()
    } else {
        format!("{}i", fmt_rational(im))
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form, reparseable by the DSL: "3/2", "-1", "i", "2i",
    /// and "(a+bi)" for properly mixed values.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Gaussian(re, im) => {
                if re.is_zero() {
                    write!(f, "{}", fmt_imag(im))
                } else if im.is_negative() {
                    write!(f, "({}{})", fmt_rational(re), fmt_imag(im))
                } else {
                    write!(f, "({}+{})", fmt_rational(re), fmt_imag(im))
                }
            }
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_with_zero_im_is_rational() {
        let z = Scalar::gaussian_int(3, 4) * Scalar::gaussian_int(3, -4);
        assert_eq!(z, Scalar::from_int(25));
        assert!(z.is_rational());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_roundtrip() {
        for z in [
            Scalar::ratio(-3, 7),
            Scalar::gaussian_int(2, 5),
            Scalar::i(),
            Scalar::gaussian(
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::new(BigInt::from(-4), BigInt::from(3)),
            ),
        ] {
            assert_eq!(&z * &z.inverse(), Scalar::one());
        }
    }

    #[test]
    fn conj_is_involution_and_multiplicative() {
        let a = Scalar::gaussian_int(2, 3);
        let b = Scalar::gaussian_int(-1, 7);
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::ratio(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::from_int(-1).to_string(), "-1");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!(Scalar::gaussian_int(0, 2).to_string(), "2i");
        assert_eq!(Scalar::gaussian_int(1, 1).to_string(), "(1+i)");
        assert_eq!(Scalar::gaussian_int(1, -2).to_string(), "(1-2i)");
    }
}
