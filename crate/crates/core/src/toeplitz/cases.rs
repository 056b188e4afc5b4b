use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

/// Corner modification `T_{α,β}`: the first diagonal entry becomes `δ − α`
/// and the last `δ − β`, with `α, β ∈ {0, ±√(στ)}` (principal root).
///
/// The variant name spells `(α, β)`: `Plus` is `+√(στ)`, `Minus` is
/// `−√(στ)`, `Zero` is `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ToeplitzTypeCase {
    ZeroPlus,
    PlusZero,
    ZeroMinus,
    MinusZero,
    PlusMinus,
    MinusPlus,
    PlusPlus,
    MinusMinus,
}

impl ToeplitzTypeCase {
    pub const ALL: [ToeplitzTypeCase; 8] = [
        ToeplitzTypeCase::ZeroPlus,
        ToeplitzTypeCase::PlusZero,
        ToeplitzTypeCase::ZeroMinus,
        ToeplitzTypeCase::MinusZero,
        ToeplitzTypeCase::PlusMinus,
        ToeplitzTypeCase::MinusPlus,
        ToeplitzTypeCase::PlusPlus,
        ToeplitzTypeCase::MinusMinus,
    ];

    /// Signs `(a, b)` with `α = a·√(στ)`, `β = b·√(στ)`.
    pub fn signs(self) -> (f64, f64) {
        use ToeplitzTypeCase::*;
        match self {
            ZeroPlus => (0.0, 1.0),
            PlusZero => (1.0, 0.0),
            ZeroMinus => (0.0, -1.0),
            MinusZero => (-1.0, 0.0),
            PlusMinus => (1.0, -1.0),
            MinusPlus => (-1.0, 1.0),
            PlusPlus => (1.0, 1.0),
            MinusMinus => (-1.0, -1.0),
        }
    }

    pub fn name(self) -> &'static str {
        use ToeplitzTypeCase::*;
        match self {
            ZeroPlus => "zero-plus",
            PlusZero => "plus-zero",
            ZeroMinus => "zero-minus",
            MinusZero => "minus-zero",
            PlusMinus => "plus-minus",
            MinusPlus => "minus-plus",
            PlusPlus => "plus-plus",
            MinusMinus => "minus-minus",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Either the plain tridiagonal Toeplitz matrix or one of its eight
/// corner-modified variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Toeplitz,
    Type(ToeplitzTypeCase),
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Toeplitz,
        Family::Type(ToeplitzTypeCase::ZeroPlus),
        Family::Type(ToeplitzTypeCase::PlusZero),
        Family::Type(ToeplitzTypeCase::ZeroMinus),
        Family::Type(ToeplitzTypeCase::MinusZero),
        Family::Type(ToeplitzTypeCase::PlusMinus),
        Family::Type(ToeplitzTypeCase::MinusPlus),
        Family::Type(ToeplitzTypeCase::PlusPlus),
        Family::Type(ToeplitzTypeCase::MinusMinus),
    ];

    /// `θ_h` in `λ_h = δ + 2√(στ)·cos θ_h`.
    pub(crate) fn angle(self, n: usize, h: usize) -> f64 {
        use ToeplitzTypeCase::*;
        let (n, h) = (n as f64, h as f64);
        match self {
            Family::Toeplitz => h * PI / (n + 1.0),
            Family::Type(ZeroPlus | PlusZero) => 2.0 * h * PI / (2.0 * n + 1.0),
            Family::Type(ZeroMinus | MinusZero) => (2.0 * h - 1.0) * PI / (2.0 * n + 1.0),
            Family::Type(PlusMinus | MinusPlus) => (2.0 * h - 1.0) * PI / (2.0 * n),
            Family::Type(PlusPlus) => h * PI / n,
            Family::Type(MinusMinus) => (h - 1.0) * PI / n,
        }
    }

    /// Trigonometric factor of component `k` of eigenvector `h`; the full
    /// right eigenvector is `r^k` times this.
    pub(crate) fn profile(self, n: usize, h: usize, k: usize) -> f64 {
        use ToeplitzTypeCase::*;
        let (n, h, k) = (n as f64, h as f64, k as f64);
        match self {
            Family::Toeplitz => (h * k * PI / (n + 1.0)).sin(),
            Family::Type(ZeroPlus) => (2.0 * h * k * PI / (2.0 * n + 1.0)).sin(),
            Family::Type(PlusZero) => (h * (2.0 * k - 1.0) * PI / (2.0 * n + 1.0)).sin(),
            Family::Type(ZeroMinus) => ((2.0 * h - 1.0) * k * PI / (2.0 * n + 1.0)).sin(),
            Family::Type(MinusZero) => {
                ((2.0 * h - 1.0) * (2.0 * k - 1.0) * PI / (2.0 * (2.0 * n + 1.0))).cos()
            }
            Family::Type(PlusMinus) => ((2.0 * h - 1.0) * (2.0 * k - 1.0) * PI / (4.0 * n)).sin(),
            Family::Type(MinusPlus) => ((2.0 * h - 1.0) * (2.0 * k - 1.0) * PI / (4.0 * n)).cos(),
            Family::Type(PlusPlus) => (h * (2.0 * k - 1.0) * PI / (2.0 * n)).sin(),
            Family::Type(MinusMinus) => ((h - 1.0) * (2.0 * k - 1.0) * PI / (2.0 * n)).cos(),
        }
    }

    /// `Σ_k profile(k)²`, which is also `y_h^H x_h` for the unnormalized pair.
    pub(crate) fn profile_norm_sq(self, n: usize, h: usize) -> f64 {
        use ToeplitzTypeCase::*;
        let nf = n as f64;
        match self {
            Family::Toeplitz => (nf + 1.0) / 2.0,
            Family::Type(ZeroPlus | PlusZero | ZeroMinus | MinusZero) => (2.0 * nf + 1.0) / 4.0,
            Family::Type(PlusMinus | MinusPlus) => nf / 2.0,
            // Every profile entry is ±1 at the edge index.
            Family::Type(PlusPlus) if h == n => nf,
            Family::Type(MinusMinus) if h == 1 => nf,
            Family::Type(PlusPlus | MinusMinus) => nf / 2.0,
        }
    }
}

impl From<ToeplitzTypeCase> for Family {
    fn from(c: ToeplitzTypeCase) -> Self {
        Family::Type(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_norms_match_direct_sums() {
        for n in 1..=40 {
            for fam in Family::ALL {
                for h in 1..=n {
                    let direct: f64 = (1..=n).map(|k| fam.profile(n, h, k).powi(2)).sum();
                    let closed = fam.profile_norm_sq(n, h);
                    assert!((direct - closed).abs() < 1e-11 * closed, "{fam:?} n={n} h={h}: {direct} vs {closed}");
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for c in ToeplitzTypeCase::ALL {
            assert_eq!(ToeplitzTypeCase::from_name(c.name()), Some(c));
        }
        assert_eq!(ToeplitzTypeCase::from_name("plus"), None);
    }
}
