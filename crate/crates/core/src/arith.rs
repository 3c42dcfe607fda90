//! Exact arithmetic in the cyclotomic field `Q(q) = Q[X]/Φ_n(X)`.
//!
//! A [`Scalar`] is the canonical residue of a rational polynomial modulo the
//! `n`-th cyclotomic polynomial, so equality of scalars is coefficientwise.
//! The image of `X` is the primitive `n`-th root of unity `q`. For `n = 1`
//! and `n = 2` the field is `Q` itself with `q = 1` and `q = -1`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The cyclotomic field `Q(ζ_n)` presented as `Q[X]/Φ_n`.
pub struct FieldSpec {
    n: u32,
    /// `Φ_n`, monic, lowest degree first.
    modulus: Vec<BigInt>,
    /// `X^k mod Φ_n` for `0 <= k < max(n, 2 deg - 1)`.
    reduced_powers: Vec<Vec<BigInt>>,
}

/// Shared handle to a field; scalars keep one so they can be combined freely.
pub type Field = Arc<FieldSpec>;

impl FieldSpec {
    /// Order of the root of unity `q`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The cyclotomic polynomial `Φ_n`, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// `φ(n)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.n)
    }
}

/// Builds `Q(ζ_n)`.
pub fn make_field(n: u32) -> Result<Field> {
    if n == 0 {
        return Err(Error::Range("field order n must be at least 1".into()));
    }
    let modulus = cyclotomic_polynomial(n);
    let degree = modulus.len() - 1;
    let count = core::cmp::max(n as usize, 2 * degree - 1);
    let mut reduced_powers = Vec::with_capacity(count);
    let mut current = vec![BigInt::zero(); degree];
    current[0] = BigInt::one();
    for _ in 0..count {
        reduced_powers.push(current.clone());
        // multiply by X and reduce the overflow with X^d = -(Φ_n - X^d)
        let top = current[degree - 1].clone();
        for k in (1..degree).rev() {
            current[k] = current[k - 1].clone();
        }
        current[0] = BigInt::zero();
        if !top.is_zero() {
            for k in 0..degree {
                current[k] -= &top * &modulus[k];
            }
        }
    }
    Ok(Arc::new(FieldSpec { n, modulus, reduced_powers }))
}

/// `Φ_n` obtained by dividing `X^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            p = exact_monic_division(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An element of `Q(q)` in canonical reduced form.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    coeffs: Vec<BigRational>,
}

fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || a.n == b.n
}

impl Scalar {
    pub fn zero(field: &Field) -> Self {
        Scalar { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree()] }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Field, v: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(field: &Field, v: BigRational) -> Self {
        let mut s = Self::zero(field);
        s.coeffs[0] = v;
        s
    }

    /// `p/d` as a scalar; `d` must be nonzero.
    pub fn ratio(field: &Field, p: i64, d: i64) -> Self {
        Self::from_rational(field, BigRational::new(BigInt::from(p), BigInt::from(d)))
    }

    /// The primitive root of unity `q`.
    pub fn q(field: &Field) -> Self {
        Self::q_pow(field, 1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(field: &Field, k: i64) -> Self {
        let n = field.n as i64;
        let e = k.rem_euclid(n) as usize;
        let coeffs = field.reduced_powers[e].iter().map(|c| BigRational::from_integer(c.clone())).collect();
        Scalar { field: field.clone(), coeffs }
    }

    /// Reduces an arbitrary polynomial in `q` (lowest degree first).
    pub fn from_poly(field: &Field, poly: &[BigRational]) -> Self {
        let d = field.degree();
        let mut coeffs = vec![BigRational::zero(); d];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                coeffs[k] += c;
            } else {
                let red = reduced_power(field, k);
                for (j, r) in red.iter().enumerate() {
                    if !r.is_zero() {
                        coeffs[j] += c * BigRational::from_integer(r.clone());
                    }
                }
            }
        }
        Scalar { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients of the reduced representative, lowest degree first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number when it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_n`.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(&self.field, r.recip()));
        }
        let modulus: Vec<BigRational> =
            self.field.modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut r0 = modulus;
        let mut r1 = trimmed(self.coeffs.clone());
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1);
            r0 = core::mem::replace(&mut r1, rem);
            let next = poly_sub(&s0, &poly_mul(&quot, &s1));
            s0 = core::mem::replace(&mut s1, next);
        }
        // r0 is a nonzero constant since Φ_n is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let scaled: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
        Ok(Self::from_poly(&self.field, &scaled))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one(&self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Coefficients as `"p/q"` strings in lowest terms, lowest degree first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect()
    }

    /// Inverse of [`Scalar::coefficient_strings`]; plain integers are accepted too.
    pub fn from_coefficient_strings<S: AsRef<str>>(field: &Field, parts: &[S]) -> Result<Scalar> {
        let mut poly = Vec::with_capacity(parts.len());
        for p in parts {
            poly.push(parse_rational(p.as_ref())?);
        }
        Ok(Self::from_poly(field, &poly))
    }

    /// Human-readable polynomial in `q`, e.g. `1 + q`, `-1/2*q^2`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            let body = match k {
                0 => rational_text(&mag),
                _ => {
                    let qpart = if k == 1 { "q".to_string() } else { format!("q^{k}") };
                    if mag.is_one() {
                        qpart
                    } else {
                        format!("{}*{}", rational_text(&mag), qpart)
                    }
                }
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// True when the text form needs parentheses as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }

    /// Parses the text form accepted by [`crate::parse`] (rationals, `q`, `+ - * ^`, parentheses).
    pub fn parse(text: &str, field: &Field) -> Result<Scalar> {
        let expr = crate::parse::parse_expr(text)?;
        crate::parse::eval_scalar(&expr, field)
    }
}

pub(crate) fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse { pos: 0, msg: format!("invalid rational `{text}`") };
    let t = text.trim();
    match t.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(p, d))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

fn reduced_power(field: &Field, k: usize) -> Vec<BigInt> {
    if k < field.reduced_powers.len() {
        return field.reduced_powers[k].clone();
    }
    // q^k = q^(k mod n), and k mod n is always tabulated
    field.reduced_powers[k % field.n as usize].clone()
}

fn trimmed(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); core::cmp::max(a.len(), b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trimmed(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), trimmed(rem));
    }
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (trimmed(quot), trimmed(rem))
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn check_fields(a: &Scalar, b: &Scalar) {
    assert!(same_field(&a.field, &b.field), "scalars from Q(zeta_{}) and Q(zeta_{}) combined", a.field.n, b.field.n);
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        check_fields(self, rhs);
        let d = self.coeffs.len();
        if d == 1 {
            return Scalar { field: self.field.clone(), coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut wide = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    wide[i + j] += x * y;
                }
            }
        }
        Scalar::from_poly(&self.field, &wide)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in &mut self.coeffs {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        check_fields(self, rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        check_fields(self, rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

/// The q-integer `[j] = 1 + q + ... + q^(j-1)`.
pub fn q_int(j: u32, field: &Field) -> Scalar {
    let mut acc = Scalar::zero(field);
    for k in 0..j {
        acc += &Scalar::q_pow(field, k as i64);
    }
    acc
}

/// `[j]! = [j][j-1]...[1]`, with `[0]! = 1`.
pub fn q_factorial(j: u32, field: &Field) -> Scalar {
    (1..=j).fold(Scalar::one(field), |acc, k| &acc * &q_int(k, field))
}

/// Gaussian binomial `[j choose r]` at `q`, defined for `0 <= r <= j < n`.
pub fn q_binomial(j: i64, r: i64, field: &Field) -> Result<Scalar> {
    let n = field.n as i64;
    if r < 0 || r > j || j >= n {
        return Err(Error::Range(format!("q_binomial({j}, {r}) needs 0 <= r <= j < n = {n}")));
    }
    if r == 0 {
        return Ok(Scalar::one(field));
    }
    let mut num = Scalar::one(field);
    for k in (j - r + 1)..=j {
        num = &num * &q_int(k as u32, field);
    }
    num.try_div(&q_factorial(r as u32, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_fields() {
        let f1 = make_field(1).unwrap();
        assert_eq!(f1.degree(), 1);
        assert!(Scalar::q(&f1).is_one());
        let f2 = make_field(2).unwrap();
        assert_eq!(f2.degree(), 1);
        assert_eq!(Scalar::q(&f2), Scalar::from_int(&f2, -1));
        assert!(make_field(0).is_err());
    }

    #[test]
    fn cyclotomic_moduli() {
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(make_field(12).unwrap().degree(), 4);
    }

    #[test]
    fn root_of_unity_inverse() {
        let f = make_field(3).unwrap();
        let q = Scalar::q(&f);
        assert_eq!(q.inv().unwrap(), Scalar::q_pow(&f, 2));
        assert!(Scalar::one(&f).inv().unwrap().is_one());
        assert_eq!(Scalar::zero(&f).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_of_one_plus_q() {
        // 1 + q = -q^2 in Q(ζ_3), so its inverse is -q
        let f = make_field(3).unwrap();
        let a = &Scalar::one(&f) + &Scalar::q(&f);
        let inv = a.inv().unwrap();
        assert_eq!(inv, -Scalar::q(&f));
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn q_numbers() {
        let f = make_field(3).unwrap();
        assert!(q_int(3, &f).is_zero());
        assert_eq!(q_binomial(2, 1, &f).unwrap(), &Scalar::one(&f) + &Scalar::q(&f));
        assert!(q_binomial(2, 0, &f).unwrap().is_one());
        assert!(q_binomial(3, 1, &f).is_err());
        assert!(q_binomial(2, 3, &f).is_err());
        assert!(q_binomial(2, -1, &f).is_err());
    }

    #[test]
    fn text_forms() {
        let f = make_field(5).unwrap();
        let s = &Scalar::ratio(&f, -1, 2) + &Scalar::q_pow(&f, 2);
        assert_eq!(s.to_text(), "-1/2 + q^2");
        assert_eq!(Scalar::parse(&s.to_text(), &f).unwrap(), s);
        assert_eq!(Scalar::zero(&f).to_text(), "0");
        let strings = s.coefficient_strings();
        assert_eq!(strings, ["-1/2", "0/1", "1/1", "0/1"]);
        assert_eq!(Scalar::from_coefficient_strings(&f, &strings).unwrap(), s);
    }
}
