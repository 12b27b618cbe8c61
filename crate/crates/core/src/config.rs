//! The global comparison tolerance.

/// Default absolute tolerance for interval endpoint comparisons and coverage gaps.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Environment variable that overrides [`DEFAULT_TOL`] for the command-line tool.
pub const TOL_ENV_VAR: &str = "KFRECHET_TOL";

/// Reads the tolerance from `KFRECHET_TOL`, falling back to [`DEFAULT_TOL`].
///
/// Fails when the variable is set but is not a finite non-negative number.
pub fn tolerance_from_env() -> Result<f64, String> {
    match std::env::var(TOL_ENV_VAR) {
        Err(_) => Ok(DEFAULT_TOL),
        Ok(raw) => parse_tolerance(&raw),
    }
}

pub fn parse_tolerance(raw: &str) -> Result<f64, String> {
    match raw.trim().parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!("{TOL_ENV_VAR}: expected a non-negative number, got {raw:?}")),
    }
}
