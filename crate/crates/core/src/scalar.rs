//! Scalar fields: exact Gaussian rationals and complex floats.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_complex::Complex64 as C64;

/// Sign of the real part of a scalar, with a tolerance band around zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// A field of complex scalars usable for structure constants and matrices.
///
/// `EXACT` backends ignore every tolerance argument.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn i() -> Self;
    fn from_i64(n: i64) -> Self;
    /// The real rational `num / den`.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// `re + i·im` from floats; exact backends convert the binary values
    /// without rounding. `None` for non-finite input.
    fn from_parts(re: f64, im: f64) -> Option<Self>;
    fn gaussian(re: Self, im: Self) -> Self {
        re + Self::i() * im
    }
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero_tol(&self, tol: f64) -> bool;
    /// A cheap size measure used for pivot selection.
    fn magnitude(&self) -> f64;
    fn to_c64(&self) -> C64;
    fn re_sign(&self, tol: f64) -> Sign;
    /// The imaginary part is within tolerance of zero.
    fn is_real_tol(&self, tol: f64) -> bool;

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).is_zero_tol(tol)
    }
    fn is_one_tol(&self, tol: f64) -> bool {
        self.approx_eq(&Self::one(), tol)
    }
}

fn fabs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// Gaussian rational `re + i·im` with arbitrary-precision parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussRat { re, im: BigRational::zero() }
    }

    fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Parts written as `p` or `p/q`.
    pub fn part_strings(&self) -> [String; 2] {
        [fmt_rat(&self.re), fmt_rat(&self.im)]
    }

    /// Inverse of [`GaussRat::part_strings`].
    pub fn parse_parts(re: &str, im: &str) -> Option<Self> {
        Some(GaussRat::new(re.trim().parse().ok()?, im.trim().parse().ok()?))
    }
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn rat_to_f64(r: &BigRational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rat(&self.re));
        }
        let im_abs = self.im.abs();
        let im_txt = if im_abs.is_one() { String::from("i") } else { format!("{}i", fmt_rat(&im_abs)) };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_txt}")
            } else {
                f.write_str(&im_txt)
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", fmt_rat(&self.re), sign, im_txt)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::real(self.re * o.re);
        }
        GaussRat { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Scalar for GaussRat {
    const EXACT: bool = true;

    fn zero() -> Self {
        GaussRat::real(BigRational::zero())
    }
    fn one() -> Self {
        GaussRat::real(BigRational::one())
    }
    fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        GaussRat::real(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::real(rat(num, den))
    }
    fn from_parts(re: f64, im: f64) -> Option<Self> {
        Some(GaussRat::new(BigRational::from_float(re)?, BigRational::from_float(im)?))
    }
    fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }
    fn inv(&self) -> Option<Self> {
        if self.re.is_zero() && self.im.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(GaussRat::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }
    fn is_zero_tol(&self, _tol: f64) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn magnitude(&self) -> f64 {
        fabs(rat_to_f64(&self.re)) + fabs(rat_to_f64(&self.im))
    }
    fn to_c64(&self) -> C64 {
        C64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
    fn re_sign(&self, _tol: f64) -> Sign {
        match self.re.cmp(&BigRational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
    fn is_real_tol(&self, _tol: f64) -> bool {
        self.im.is_zero()
    }
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }
    fn one() -> Self {
        C64::new(1.0, 0.0)
    }
    fn i() -> Self {
        C64::new(0.0, 1.0)
    }
    fn from_i64(n: i64) -> Self {
        C64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        C64::new(num as f64 / den as f64, 0.0)
    }
    fn from_parts(re: f64, im: f64) -> Option<Self> {
        (re.is_finite() && im.is_finite()).then(|| C64::new(re, im))
    }
    fn conj(&self) -> Self {
        C64::new(self.re, -self.im)
    }
    fn inv(&self) -> Option<Self> {
        if self.re == 0.0 && self.im == 0.0 {
            None
        } else {
            Some(C64::inv(self))
        }
    }
    fn is_zero_tol(&self, tol: f64) -> bool {
        fabs(self.re) <= tol && fabs(self.im) <= tol
    }
    fn magnitude(&self) -> f64 {
        fabs(self.re) + fabs(self.im)
    }
    fn to_c64(&self) -> C64 {
        *self
    }
    fn re_sign(&self, tol: f64) -> Sign {
        if self.re > tol {
            Sign::Positive
        } else if self.re < -tol {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
    fn is_real_tol(&self, tol: f64) -> bool {
        fabs(self.im) <= tol
    }
}
