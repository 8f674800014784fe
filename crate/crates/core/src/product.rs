use std::sync::atomic::{AtomicUsize, Ordering};

/// How many times an algorithm invoked each subroutine.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CallCounts {
    /// Extreme-witness computations (matrix or convolution).
    pub witness_calls: usize,
    /// Plain Boolean matrix products.
    pub bool_products: usize,
    /// Plain Boolean convolutions.
    pub bool_convolutions: usize,
}

/// Output of an instrumented algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product<T> {
    pub values: T,
    pub counts: CallCounts,
}

#[derive(Debug, Default)]
pub(crate) struct Counters {
    witness_calls: AtomicUsize,
    bool_products: AtomicUsize,
    bool_convolutions: AtomicUsize,
}

impl Counters {
    pub fn witness(&self) {
        self.witness_calls.fetch_add(1, Ordering::Relaxed);
    }

    pub fn bool_product(&self) {
        self.bool_products.fetch_add(1, Ordering::Relaxed);
    }

    pub fn bool_convolution(&self) {
        self.bool_convolutions.fetch_add(1, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> CallCounts {
        CallCounts {
            witness_calls: self.witness_calls.load(Ordering::Relaxed),
            bool_products: self.bool_products.load(Ordering::Relaxed),
            bool_convolutions: self.bool_convolutions.load(Ordering::Relaxed),
        }
    }
}
