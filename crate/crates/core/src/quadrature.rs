//! Composite trapezoid rule with successive grid doubling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Refinement policy for [`trapezoid_doubling`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Points on the first grid, endpoints included.
    pub initial_points: usize,
    /// Accept once one doubling changes the estimate by less than this.
    pub relative_tolerance: f64,
    /// Give up beyond this many points.
    pub max_points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            initial_points: (1 << 10) + 1,
            relative_tolerance: 1e-3,
            max_points: (1 << 20) + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Integral {
    pub value: f64,
    /// Points in the accepted grid.
    pub points: usize,
    /// |I_n - I_{n/2}| / |I_n| at acceptance; 0 when both are exactly 0.
    pub relative_change: f64,
}

fn relative_change(new: f64, old: f64) -> f64 {
    if new == old {
        0.0
    } else {
        (new - old).abs() / new.abs().max(old.abs())
    }
}

/// Integrate `f` over `[a, b]`, halving the step until the estimate
/// settles. Each level reuses the previous samples and adds the midpoints.
pub fn trapezoid_doubling<F>(f: F, a: f64, b: f64, grid: GridSpec) -> Result<Integral>
where
    F: Fn(f64) -> f64,
{
    if grid.initial_points < 2 {
        return Err(Error::domain("grid points", grid.initial_points as f64, "need at least 2"));
    }
    if !(b > a) {
        return Err(Error::domain("integration interval", b - a, "upper limit must exceed lower"));
    }
    let mut intervals = grid.initial_points - 1;
    let mut h = (b - a) / intervals as f64;
    let mut sum = 0.5 * (f(a) + f(b)) + (1..intervals).map(|i| f(a + h * i as f64)).sum::<f64>();
    let mut estimate = sum * h;
    let mut change = f64::INFINITY;

    while intervals * 2 < grid.max_points {
        let midpoints: f64 = (0..intervals).map(|i| f(a + h * (i as f64 + 0.5))).sum();
        sum += midpoints;
        intervals *= 2;
        h *= 0.5;
        let refined = sum * h;
        change = relative_change(refined, estimate);
        estimate = refined;
        if change < grid.relative_tolerance {
            return Ok(Integral {
                value: estimate,
                points: intervals + 1,
                relative_change: change,
            });
        }
    }
    Err(Error::Accuracy {
        estimate,
        relative_change: change,
        points: intervals + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_and_lorentzian() {
        let r = trapezoid_doubling(|x| x * x, 0.0, 3.0, GridSpec { initial_points: 3, ..Default::default() }).unwrap();
        assert_relative_eq!(r.value, 9.0, max_relative = 1e-3);

        // unit-area Lorentzian over a wide window
        let g = 1e-3;
        let l = |x: f64| (g / (2.0 * std::f64::consts::PI)) / (x * x + g * g / 4.0);
        let r = trapezoid_doubling(l, -1e3 * g, 1e3 * g, GridSpec { relative_tolerance: 1e-6, ..Default::default() }).unwrap();
        assert_relative_eq!(r.value, 1.0, max_relative = 2e-3);
    }

    #[test]
    fn zero_integrand_converges_immediately() {
        let r = trapezoid_doubling(|_| 0.0, 0.0, 1.0, GridSpec::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.relative_change, 0.0);
        assert_eq!(r.points, 2049);
    }

    #[test]
    fn reports_non_convergence() {
        let grid = GridSpec {
            initial_points: 2,
            relative_tolerance: 1e-12,
            max_points: 65,
        };
        let err = trapezoid_doubling(|x| (1e4 * x).sin().abs(), 0.0, 1.0, grid).unwrap_err();
        assert!(matches!(err, Error::Accuracy { points: 65, .. }));
    }

    #[test]
    fn rejects_degenerate_grids() {
        let g = GridSpec { initial_points: 1, ..Default::default() };
        assert!(trapezoid_doubling(|x| x, 0.0, 1.0, g).is_err());
        assert!(trapezoid_doubling(|x| x, 1.0, 1.0, GridSpec::default()).is_err());
    }
}
