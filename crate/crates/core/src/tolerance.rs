use num_complex::Complex64;

/// Entry-wise comparison rule for floating tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    /// Bit-for-bit equality; meant for integer and Gaussian-integer tables.
    Exact,
    /// Entries may differ by at most this modulus.
    Absolute(f64),
}

impl Tolerance {
    pub const DEFAULT_ABSOLUTE: f64 = 1e-10;

    pub fn admits(&self, a: Complex64, b: Complex64) -> bool {
        match *self {
            Tolerance::Exact => a == b,
            Tolerance::Absolute(eps) => (a - b).norm() <= eps,
        }
    }

    /// The largest entry-wise deviation this rule accepts.
    pub fn bound(&self) -> f64 {
        match *self {
            Tolerance::Exact => 0.0,
            Tolerance::Absolute(eps) => eps,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::Absolute(Self::DEFAULT_ABSOLUTE)
    }
}

impl std::fmt::Display for Tolerance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tolerance::Exact => f.write_str("exact"),
            Tolerance::Absolute(eps) => write!(f, "{eps:e}"),
        }
    }
}
