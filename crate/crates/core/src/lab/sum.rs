//! Compensated (Neumaier) accumulation.

use crate::frames::EvenElement;

/// Running sum carrying an exact-ish compensation term.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Folds another partial sum into this one.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.compensation += other.compensation;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }

    /// `total / n`, correcting the quotient with the division residual so
    /// that the mean of `n` equal terms reproduces the term.
    pub fn mean(&self, n: u64) -> f64 {
        let n = n as f64;
        let q = self.sum / n;
        let r = (-q).mul_add(n, self.sum);
        q + (r + self.compensation) / n
    }
}

/// Componentwise compensated sum of even elements.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EvenAccumulator {
    scalar: CompensatedSum,
    bivector: [CompensatedSum; 3],
}

impl EvenAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: &EvenElement) {
        self.scalar.add(x.scalar);
        for (acc, b) in self.bivector.iter_mut().zip(x.bivector) {
            acc.add(b);
        }
    }

    pub fn merge(&mut self, other: &EvenAccumulator) {
        self.scalar.merge(&other.scalar);
        for (acc, b) in self.bivector.iter_mut().zip(&other.bivector) {
            acc.merge(b);
        }
    }

    pub fn mean(&self, n: u64) -> EvenElement {
        EvenElement::new(self.scalar.mean(n), self.bivector.map(|b| b.mean(n)))
    }
}
