//! Linear maps between Hopf algebras given on the basis.

use alloc::format;
use alloc::vec::Vec;

use super::{accumulate, Element, HopfAlgebra, Tensor2};
use crate::error::{Error, Result};

/// A linear map `H → H'` stored as the image of each basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMap {
    pub images: Vec<Element>,
}

impl HopfMap {
    /// Checks that the map preserves unit, product, coproduct and counit on
    /// all basis elements and pairs.
    pub fn verified(images: Vec<Element>, source: &HopfAlgebra, target: &HopfAlgebra) -> Result<HopfMap> {
        let map = HopfMap { images };
        if map.images.len() != source.dim() || map.images.iter().flat_map(|e| e.keys()).any(|&k| k >= target.dim()) {
            return Err(Error::NotHopfMap("shape".into()));
        }
        if map.images[0] != target.basis_element(0) {
            return Err(Error::NotHopfMap("unit".into()));
        }
        for i in 0..source.dim() {
            if target.counit_element(&map.images[i]) != *source.counit(i) {
                return Err(Error::NotHopfMap(format!("counit at {}", source.label(i))));
            }
            let pushed = map.apply_tensor2(&source.coproduct_element(&source.basis_element(i)));
            if pushed != target.coproduct_element(&map.images[i]) {
                return Err(Error::NotHopfMap(format!("coproduct at {}", source.label(i))));
            }
            for j in 0..source.dim() {
                let lhs = map.apply(&source.mul(&source.basis_element(i), &source.basis_element(j)));
                if lhs != target.mul(&map.images[i], &map.images[j]) {
                    return Err(Error::NotHopfMap(format!("product at ({}, {})", source.label(i), source.label(j))));
                }
            }
        }
        Ok(map)
    }

    pub fn apply(&self, e: &Element) -> Element {
        let mut out = Element::new();
        for (&i, c) in e {
            for (&k, v) in &self.images[i] {
                accumulate(&mut out, k, c * v);
            }
        }
        out
    }

    pub fn apply_tensor2(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), c) in t {
            for (&ka, va) in &self.images[a] {
                let cv = c * va;
                for (&kb, vb) in &self.images[b] {
                    accumulate(&mut out, (ka, kb), &cv * vb);
                }
            }
        }
        out
    }

    /// The image of basis element `i` when it is a single basis element with
    /// coefficient 1.
    pub fn basis_image(&self, i: usize) -> Option<usize> {
        let mut it = self.images[i].iter();
        match (it.next(), it.next()) {
            (Some((&k, c)), None) if c.is_one() => Some(k),
            _ => None,
        }
    }

    pub fn compose(&self, after: &HopfMap) -> HopfMap {
        HopfMap { images: self.images.iter().map(|e| after.apply(e)).collect() }
    }
}
