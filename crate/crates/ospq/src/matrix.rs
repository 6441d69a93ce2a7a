//! Sparse matrices over [`Scalar`] or over algebra elements, with graded
//! Kronecker products.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Elem, Monomial};
use crate::report::Checkable;
use crate::scalar::Scalar;

/// A ring of matrix entries.
pub trait Entry: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
}

impl Entry for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn scale(&self, c: &Scalar) -> Self {
        Scalar::mul(self, c)
    }
}

impl<M: Monomial> Entry for Elem<M> {
    fn zero() -> Self {
        Elem::zero()
    }
    fn one() -> Self {
        Elem::one()
    }
    fn is_zero(&self) -> bool {
        Elem::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Elem::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Elem::mul(self, other)
    }
    fn neg(&self) -> Self {
        Elem::neg(self)
    }
    fn scale(&self, c: &Scalar) -> Self {
        Elem::scale(self, c)
    }
}

/// Sparse `rows × cols` matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T: Entry> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: Entry> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diag(d: Vec<T>) -> Self {
        let mut m = Mat::zeros(d.len(), d.len());
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &T) {
        let cur = self.get(i, j);
        self.set(i, j, cur.add(v));
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &T)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.add_at(i, j, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Mat { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|(k, v)| (*k, v.neg())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Mat::zeros(self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            out.set(i, j, v.scale(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut by_row: BTreeMap<usize, Vec<(usize, &T)>> = BTreeMap::new();
        for (&(k, j), v) in &other.entries {
            by_row.entry(k).or_default().push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    let p = a.mul(b);
                    match acc.get_mut(&(i, j)) {
                        Some(slot) => *slot = slot.add(&p),
                        None => {
                            acc.insert((i, j), p);
                        }
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Mat { rows: self.rows, cols: other.cols, entries: acc }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Mat::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        Mat { rows: self.cols, cols: self.rows, entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect() }
    }

    pub fn map<U: Entry>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        let mut out = Mat::zeros(self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            out.set(i, j, f(v));
        }
        out
    }

    /// Kronecker product with sign `sign(j_self, i_other, j_other)` on each
    /// entry; index `(i₁, i₂) ↦ i₁·rows(other) + i₂`.
    pub fn kron_signed(&self, other: &Self, mut sign: impl FnMut(usize, usize, usize) -> bool) -> Self {
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for (&(i1, j1), a) in &self.entries {
            for (&(i2, j2), b) in &other.entries {
                let v = a.mul(b);
                let v = if sign(j1, i2, j2) { v.neg() } else { v };
                out.set(i1 * other.rows + i2, j1 * other.cols + j2, v);
            }
        }
        out
    }

    pub fn kron(&self, other: &Self) -> Self {
        self.kron_signed(other, |_, _, _| false)
    }
}

impl<T: Entry + Checkable> Checkable for Mat<T> {
    fn exact_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn numeric_dev(&self, other: &Self, q: f64) -> Option<f64> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        let mut worst = 0.0f64;
        for k in self.entries.keys().chain(other.entries.keys()) {
            worst = worst.max(self.get(k.0, k.1).numeric_dev(&other.get(k.0, k.1), q)?);
        }
        Some(worst)
    }

    fn render(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|((i, j), v)| format!("({i},{j}): {}", v.render())).collect();
        format!("{}x{} {{{}}}", self.rows, self.cols, parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let mut a: Mat<Scalar> = Mat::zeros(2, 2);
        a.set(0, 1, Scalar::from_int(3));
        a.set(1, 0, Scalar::s_pow(1));
        let sq = a.mul(&a);
        assert_eq!(sq, Mat::diag(alloc::vec![Scalar::s_pow(1).scale_int(3), Scalar::s_pow(1).scale_int(3)]));
        assert_eq!(a.mul(&Mat::identity(2)), a);
        assert_eq!(a.kron(&Mat::identity(1)), a);
    }
}
