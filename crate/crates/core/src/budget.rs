/// Enumeration limits. Every exhaustive routine checks its input against one
/// of these before doing any work and refuses with [`crate::XcError::Refused`]
/// rather than running away.
#[derive(Debug, Clone, PartialEq)]
pub struct Budget {
    /// Largest number of subsets any power-set enumeration may visit.
    pub subsets: u64,
    pub hull_points: usize,
    pub hull_dim: usize,
    pub clique_vertices: usize,
    pub cover_rows: usize,
    pub cover_cols: usize,
    pub max_rectangles: usize,
    pub fooling_cells: usize,
    /// Largest `n` accepted by the slack-identity and embedding checks.
    pub slack_n: usize,
    /// Number of stable sets / matchings an enumeration may produce.
    pub enumerated_points: u64,
    /// Columns of a nonnegative factorization whose extension is enumerated.
    pub extension_columns: usize,
    /// Crossing gadgets planarize may insert.
    pub gadgets: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            subsets: 1 << 20,
            hull_points: 64,
            hull_dim: 16,
            clique_vertices: 20,
            cover_rows: 32,
            cover_cols: 32,
            max_rectangles: 200_000,
            fooling_cells: 1024,
            slack_n: 8,
            enumerated_points: 1 << 21,
            extension_columns: 20,
            gadgets: 64,
        }
    }
}

/// Environment variable holding a positive scale factor for the defaults.
pub const BUDGET_ENV: &str = "XCLAB_BUDGET";

// Bitset-backed routines cannot go beyond these no matter the scale factor.
const HARD_COVER_DIM: usize = 64;

impl Budget {
    /// Defaults multiplied by `factor`. Factors below one shrink budgets,
    /// which is handy for exercising refusal paths.
    pub fn scaled(factor: f64) -> Budget {
        let d = Budget::default();
        let f = if factor.is_finite() && factor > 0.0 { factor } else { 1.0 };
        let s = |v: usize| ((v as f64 * f).round() as usize).max(1);
        let s64 = |v: u64| ((v as f64 * f).round() as u64).max(1);
        Budget {
            subsets: s64(d.subsets),
            hull_points: s(d.hull_points),
            hull_dim: s(d.hull_dim),
            clique_vertices: s(d.clique_vertices),
            cover_rows: s(d.cover_rows).min(HARD_COVER_DIM),
            cover_cols: s(d.cover_cols).min(HARD_COVER_DIM),
            max_rectangles: s(d.max_rectangles),
            fooling_cells: s(d.fooling_cells),
            slack_n: s(d.slack_n),
            enumerated_points: s64(d.enumerated_points),
            extension_columns: s(d.extension_columns),
            gadgets: s(d.gadgets),
        }
    }

    /// Reads [`BUDGET_ENV`]; unset or unparsable values give the defaults.
    pub fn from_env() -> Budget {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<f64>().ok()) {
            Some(f) => Budget::scaled(f),
            None => Budget::default(),
        }
    }

    pub(crate) fn check_subsets(&self, what: &str, bits: usize) -> crate::Result<()> {
        if bits >= 64 || (1u64 << bits) > self.subsets {
            return Err(crate::XcError::refused(what, format!("2^{bits} subsets"), self.subsets));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_multiplies_and_caps() {
        let b = Budget::scaled(4.0);
        assert_eq!(b.subsets, 1 << 22);
        assert_eq!(b.cover_rows, 64);
        let tiny = Budget::scaled(1e-9);
        assert_eq!(tiny.hull_points, 1);
        assert!(tiny.check_subsets("x", 2).is_err());
    }

    #[test]
    fn bad_factor_falls_back() {
        assert_eq!(Budget::scaled(f64::NAN), Budget::default());
        assert_eq!(Budget::scaled(-3.0), Budget::default());
    }
}
