//! Compensated (Neumaier) summation.

/// Running sum with a Neumaier error term.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

pub fn sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    let mut acc = CompensatedSum::new();
    acc.extend(iter);
    acc.value()
}

/// Prefix sums `[0, x_1, x_1 + x_2, ...]` of length `len + 1`.
pub fn prefix_sums<I: IntoIterator<Item = f64>>(iter: I) -> Vec<f64> {
    let iter = iter.into_iter();
    let mut out = Vec::with_capacity(iter.size_hint().0 + 1);
    out.push(0.0);
    let mut acc = CompensatedSum::new();
    for x in iter {
        acc.add(x);
        out.push(acc.value());
    }
    out
}

/// Prefix sums of nonnegative terms, clamped so the result is nondecreasing.
pub(crate) fn monotone_prefix_sums<I: IntoIterator<Item = f64>>(iter: I) -> Vec<f64> {
    let mut out = prefix_sums(iter);
    for k in 1..out.len() {
        if out[k] < out[k - 1] {
            out[k] = out[k - 1];
        }
    }
    out
}
