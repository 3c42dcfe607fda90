//! Noncommutative polynomials in the symbols `X_b`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::hopf::{accumulate, HopfAlgebra};
use crate::parse::{parse_expr, Expr};

/// A word in the symbols `X_b`, as basis indices. The empty word is the unit.
pub type Word = Vec<usize>;

/// An element of the tensor algebra `T(X_H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(field: &Field) -> Self {
        NCPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::word(Word::new(), c)
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(Scalar::one(field))
    }

    pub fn word(w: Word, c: Scalar) -> Self {
        let mut out = Self::zero(&c.field().clone());
        accumulate(&mut out.terms, w, c);
        out
    }

    /// The generator `X_b`.
    pub fn var(b: usize, field: &Field) -> Self {
        Self::word(alloc::vec![b], Scalar::one(field))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the longest word.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        accumulate(&mut self.terms, w, c);
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.scale(&-Scalar::one(&self.field)))
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        let mut out = NCPoly::zero(&self.field);
        for (w, c) in &self.terms {
            accumulate(&mut out.terms, w.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(&self.field);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                accumulate(&mut out.terms, w, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> NCPoly {
        (0..k).fold(NCPoly::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Text such as `X[y]*X[x] - q*X[x]*X[y]`.
    pub fn text(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let word: Vec<String> = w.iter().map(|&b| format!("X[{}]", labels[b])).collect();
            let ctext = c.to_text();
            let (neg, mag) = if !c.is_compound() && ctext.starts_with('-') { (true, -c) } else { (false, c.clone()) };
            let coef = if mag.is_compound() { format!("({})", mag.to_text()) } else { mag.to_text() };
            let body = match (word.is_empty(), mag.is_one()) {
                (true, _) => coef,
                (false, true) => word.join("*"),
                (false, false) => format!("{coef}*{}", word.join("*")),
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

/// Parses `X[label]` expressions with rational and `q` coefficients against
/// the basis labels of `h`.
pub fn parse_ncpoly(text: &str, h: &HopfAlgebra) -> Result<NCPoly> {
    let expr = parse_expr(text)?;
    eval(&expr, h)
}

fn eval(e: &Expr, h: &HopfAlgebra) -> Result<NCPoly> {
    let f = h.field();
    Ok(match e {
        Expr::Number(r) => NCPoly::constant(Scalar::from_rational(f, r.clone())),
        Expr::Q => NCPoly::constant(Scalar::q(f)),
        Expr::Symbol(label, _) => {
            let b = h.index_of(label).ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            NCPoly::var(b, f)
        }
        Expr::Add(a, b) => eval(a, h)?.add(&eval(b, h)?),
        Expr::Sub(a, b) => eval(a, h)?.sub(&eval(b, h)?),
        Expr::Mul(a, b) => eval(a, h)?.mul(&eval(b, h)?),
        Expr::Neg(a) => eval(a, h)?.scale(&-Scalar::one(f)),
        Expr::Pow(a, k) => eval(a, h)?.pow(*k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::taft;

    #[test]
    fn parsing() {
        let h = taft(3).unwrap();
        let p = parse_ncpoly("X[1]", &h).unwrap();
        assert_eq!(p, NCPoly::var(0, h.field()));
        let p = parse_ncpoly("X[y]*X[x] - q*X[x]*X[y]", &h).unwrap();
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.text(h.labels()), "-q*X[x]*X[y] + X[y]*X[x]");
        let x = h.index_of("x").unwrap();
        assert_eq!(parse_ncpoly("X[x]^3", &h).unwrap(), NCPoly::word(alloc::vec![x, x, x], Scalar::one(h.field())));
        assert_eq!(parse_ncpoly("X[z]", &h), Err(Error::UnknownLabel("z".into())));
        assert!(matches!(parse_ncpoly("X[x]*", &h), Err(Error::Parse { pos: 5, .. })));
    }

    #[test]
    fn arithmetic() {
        let h = taft(2).unwrap();
        let f = h.field();
        let a = NCPoly::var(1, f);
        let b = NCPoly::var(2, f);
        let comm = a.mul(&b).sub(&b.mul(&a));
        assert_eq!(comm.terms().len(), 2);
        assert!(comm.add(&b.mul(&a)).sub(&a.mul(&b)).is_zero());
        assert_eq!(a.add(&b).pow(2).terms().len(), 4);
        assert_eq!(a.pow(3).degree(), 3);
    }
}
