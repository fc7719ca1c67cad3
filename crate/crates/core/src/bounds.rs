//! Closed-form values and bounds: convex sets, double chains, Kneser graphs
//! and the extremal function `d(n)`.
//!
//! Every expression of the shape `⌊√(2m + 1/4) − 1/2⌋` is evaluated exactly as
//! the largest `j` with `j(j + 1) ≤ 2m`.

/// Largest `j ≥ 0` with `j(j + 1) ≤ x`; equals `⌊√(x + 1/4) − 1/2⌋`.
pub fn triangular_root(x: u64) -> u64 {
    let j = x.isqrt();
    if j * (j + 1) > x {
        j - 1
    } else {
        j
    }
}

/// `χ(D(C_n)) = n − ⌊√(2n + 1/4) − 1/2⌋` for `n ≥ 3`.
pub fn convex_chi(n: u64) -> u64 {
    n - triangular_root(2 * n)
}

/// `χ(D(C_{k,l})) = k + l − ⌊√(2l + 1/4) − 1/2⌋`, valid for `l ≥ max(3, k)`.
/// Returns `None` outside that range.
pub fn double_chain_chi(k: u64, l: u64) -> Option<u64> {
    (k >= 1 && l >= 3 && l >= k).then(|| k + l - triangular_root(2 * l))
}

/// `χ(KG(n, k)) = n − 2k + 2` for `n ≥ 2k − 1`, `k ≥ 1`.
pub fn kneser_chi(n: u64, k: u64) -> Option<u64> {
    (k >= 1 && n + 1 >= 2 * k).then(|| (n + 2).saturating_sub(2 * k).max(1))
}

/// `⌊log₂ log₂ n⌋` for `n ≥ 2`, in integers: the largest `j` with
/// `2^(2^j) ≤ n`.
pub fn floor_log2_log2(n: u64) -> u32 {
    assert!(n >= 2, "log log undefined below 2");
    let mut j = 0u32;
    while j + 1 < 6 && (1u128 << (1u32 << (j + 1))) <= n as u128 {
        j += 1;
    }
    j
}

/// Known bounds on `d(n)`, the maximum of `χ(D(P))` over `n`-point sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DnBounds {
    pub n: u64,
    /// `5⌊n/7⌋`.
    pub lower_sevenths: u64,
    /// `χ(D(C_{⌊n/2⌋,⌈n/2⌉}))`; for even `n` this is `n − ⌊√(n + 1/4) − 1/2⌋`.
    /// Absent for `n < 5`, where no balanced double chain meets `l ≥ 3`.
    pub lower_double_chain: Option<u64>,
    /// `n − 2`.
    pub upper_trivial: u64,
    /// Twice `n + 1/2 − ⌊log₂ log₂ n⌋/2`, kept doubled so it stays integral.
    pub upper_loglog_doubled: u64,
}

/// Base of the logarithm used in [`DnBounds::upper_loglog_doubled`].
pub const LOG_BASE: u32 = 2;

impl DnBounds {
    pub fn new(n: u64) -> Self {
        assert!(n >= 3, "bounds need n >= 3");
        DnBounds {
            n,
            lower_sevenths: 5 * (n / 7),
            lower_double_chain: double_chain_chi(n / 2, n - n / 2),
            upper_trivial: n - 2,
            upper_loglog_doubled: 2 * n + 1 - floor_log2_log2(n) as u64,
        }
    }

    pub fn lower(&self) -> u64 {
        self.lower_sevenths.max(self.lower_double_chain.unwrap_or(0)).max(1)
    }

    /// The integer upper bound: `d(n)` is an integer, so the half-integral
    /// term is rounded down.
    pub fn upper(&self) -> u64 {
        self.upper_trivial.min(self.upper_loglog_doubled / 2)
    }

    /// A lower bound above an upper bound means a formula was transcribed
    /// wrongly.
    pub fn inconsistent(&self) -> bool {
        self.lower() > self.upper()
    }
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;

    fn root_by_float(x: u64) -> u64 {
        ((x as f64 + 0.25).sqrt() - 0.5).floor() as u64
    }

    #[test]
    fn triangular_root_matches_float_form() {
        for x in 0..5000 {
            assert_eq!(triangular_root(x), root_by_float(x), "x={x}");
        }
    }

    #[test]
    fn convex_values() {
        let got: alloc::vec::Vec<u64> = (3..=10).map(convex_chi).collect();
        assert_eq!(got, [1, 2, 3, 3, 4, 5, 6, 6]);
    }

    #[test]
    fn double_chain_values() {
        assert_eq!(double_chain_chi(3, 3), Some(4));
        assert_eq!(double_chain_chi(5, 5), Some(8));
        assert_eq!(double_chain_chi(3, 5), Some(6));
        assert_eq!(double_chain_chi(1, 3), Some(2));
        assert_eq!(double_chain_chi(4, 3), None);
        assert_eq!(double_chain_chi(2, 2), None);
    }

    #[test]
    fn kneser_values() {
        assert_eq!(kneser_chi(6, 2), Some(4));
        assert_eq!(kneser_chi(5, 2), Some(3));
        assert_eq!(kneser_chi(3, 2), Some(1));
        assert_eq!(kneser_chi(2, 2), None);
    }

    #[test]
    fn loglog() {
        assert_eq!(floor_log2_log2(2), 0);
        assert_eq!(floor_log2_log2(3), 0);
        assert_eq!(floor_log2_log2(4), 1);
        assert_eq!(floor_log2_log2(15), 1);
        assert_eq!(floor_log2_log2(16), 2);
        assert_eq!(floor_log2_log2(255), 2);
        assert_eq!(floor_log2_log2(256), 3);
        assert_eq!(floor_log2_log2(u64::MAX), 5);
        for n in 2..2000u64 {
            let f = (n as f64).log2().log2().floor() as u32;
            assert_eq!(floor_log2_log2(n), f, "n={n}");
        }
    }

    #[test]
    fn dn_table() {
        let b7 = DnBounds::new(7);
        assert_eq!((b7.lower(), b7.upper()), (5, 5));
        assert_eq!(DnBounds::new(14).lower_sevenths, 10);
        assert_eq!(DnBounds::new(16).lower_double_chain, Some(13));
        assert_eq!(DnBounds::new(4).lower_double_chain, None);
        for n in (6..200).step_by(2) {
            assert_eq!(DnBounds::new(n).lower_double_chain, Some(n - root_by_float(n)));
        }
        for n in 3..500 {
            assert!(!DnBounds::new(n).inconsistent(), "n={n}");
        }
    }
}
