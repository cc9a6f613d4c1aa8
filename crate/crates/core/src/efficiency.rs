//! Parallel efficiency surface over core count and parallel fraction.
//!
//! Uses the Amdahl form E(N, a) = 1 / (N*(1-a) + a): the serial fraction of
//! the workload is executed N times while the parallel fraction is executed
//! once, so efficiency collapses as N grows unless a is extremely close to
//! one. The model name is carried in every output so the choice of form is
//! visible downstream.

use serde::Serialize;

use crate::config::AnalysisConfig;
use crate::error::{Error, Result};

/// Model identifier embedded in surface output metadata.
pub const EFFICIENCY_MODEL: &str = "amdahl";

/// One evaluated point of the efficiency surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EfficiencyPoint {
    pub cores: u64,
    pub alpha: f64,
    pub efficiency: f64,
}

/// Efficiency of `cores` processors on a workload with parallel fraction `alpha`.
///
/// Equals one exactly for a single core or a perfectly parallel workload,
/// and decreases strictly in the core count otherwise.
pub fn efficiency(cores: u64, alpha: f64) -> Result<f64> {
    if cores == 0 {
        return Err(Error::InvalidArgument(
            "core count must be at least 1".into(),
        ));
    }
    if !alpha.is_finite() || !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidArgument(format!(
            "parallel fraction must be in [0, 1], got {alpha}"
        )));
    }
    let n = cores as f64;
    // N*(1-a) + a rearranged as N - a*(N-1); exact at the N=1 and a=1 boundaries.
    Ok(1.0 / (n - alpha * (n - 1.0)))
}

/// Parallel fraction implied by a processing time and a non-parallelizable
/// overhead (transfer, synchronization): processing / (processing + overhead).
pub fn alpha_from_timing(processing: f64, overhead: f64) -> Result<f64> {
    if !processing.is_finite() || processing <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "processing time must be positive, got {processing}"
        )));
    }
    if !overhead.is_finite() || overhead < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "overhead must be non-negative, got {overhead}"
        )));
    }
    Ok(processing / (processing + overhead))
}

/// Full cross-product grid over the two axes, core counts outermost.
pub fn efficiency_surface(core_counts: &[u64], alphas: &[f64]) -> Result<Vec<EfficiencyPoint>> {
    if core_counts.is_empty() || alphas.is_empty() {
        return Err(Error::InvalidArgument(
            "surface axes must be non-empty".into(),
        ));
    }
    let mut grid = Vec::with_capacity(core_counts.len() * alphas.len());
    for &n in core_counts {
        for &a in alphas {
            grid.push(EfficiencyPoint {
                cores: n,
                alpha: a,
                efficiency: efficiency(n, a)?,
            });
        }
    }
    Ok(grid)
}

/// A named workload preset: an illustrative parallel fraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WorkloadPreset {
    pub name: &'static str,
    pub alpha: f64,
}

/// Illustrative presets for a best-case benchmark load and a real-life load.
/// These are defaults for the demo surface, not measurements of any machine.
pub fn workload_presets() -> [WorkloadPreset; 2] {
    [
        WorkloadPreset {
            name: "hpl-like",
            alpha: 1.0 - 1e-7,
        },
        WorkloadPreset {
            name: "hpcg-like",
            alpha: 1.0 - 1e-5,
        },
    ]
}

/// Default core-count axis: 1, 3, 10, 30, ... up to 1e7, supercomputer scale.
pub fn default_core_counts() -> Vec<u64> {
    let mut counts = Vec::new();
    let mut decade: u64 = 1;
    while decade <= 10_000_000 {
        counts.push(decade);
        if 3 * decade <= 10_000_000 {
            counts.push(3 * decade);
        }
        decade *= 10;
    }
    counts
}

/// Grid as CSV with a self-describing header comment.
pub fn surface_csv(grid: &[EfficiencyPoint], config: &AnalysisConfig) -> String {
    let mut out = String::new();
    out.push_str(&format!("# model={EFFICIENCY_MODEL} {}\n", config.summary()));
    out.push_str("cores,alpha,efficiency\n");
    for p in grid {
        out.push_str(&format!(
            "{},{:.9},{:.6e}\n",
            p.cores, p.alpha, p.efficiency
        ));
    }
    out
}

#[derive(Serialize)]
struct SurfaceJson<'a> {
    model: &'static str,
    config: &'a AnalysisConfig,
    core_axis: &'a [u64],
    alpha_axis: &'a [f64],
    points: &'a [EfficiencyPoint],
}

/// Grid as JSON with axes metadata and the model name.
pub fn surface_json(
    grid: &[EfficiencyPoint],
    core_counts: &[u64],
    alphas: &[f64],
    config: &AnalysisConfig,
) -> String {
    let doc = SurfaceJson {
        model: EFFICIENCY_MODEL,
        config,
        core_axis: core_counts,
        alpha_axis: alphas,
        points: grid,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("surface serialization");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_core_is_always_fully_efficient() {
        for &a in &[0.0, 0.3, 0.999, 1.0] {
            assert_eq!(efficiency(1, a).unwrap(), 1.0);
        }
    }

    #[test]
    fn perfectly_parallel_is_fully_efficient() {
        for &n in &[1u64, 2, 1000, 10_000_000] {
            assert_eq!(efficiency(n, 1.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn thousand_cores_three_nines() {
        let e = efficiency(1000, 0.999).unwrap();
        assert!((e - 0.50025).abs() < 1e-5, "e = {e}");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(efficiency(0, 0.5).is_err());
        assert!(efficiency(10, -0.1).is_err());
        assert!(efficiency(10, 1.1).is_err());
        assert!(efficiency(10, f64::NAN).is_err());
    }

    #[test]
    fn alpha_from_timing_limits() {
        assert_eq!(alpha_from_timing(1.0, 0.0).unwrap(), 1.0);
        assert_eq!(alpha_from_timing(2.5, 2.5).unwrap(), 0.5);
        let a = alpha_from_timing(1.0, 1e-3).unwrap();
        assert!((a - 0.999001).abs() < 1e-6, "a = {a}");
        assert!(alpha_from_timing(0.0, 1.0).is_err());
        assert!(alpha_from_timing(1.0, -1.0).is_err());
    }

    #[test]
    fn surface_single_point() {
        let grid = efficiency_surface(&[1], &[0.5]).unwrap();
        assert_eq!(grid.len(), 1);
        assert_eq!(grid[0].efficiency, 1.0);
    }

    #[test]
    fn surface_rejects_empty_axis() {
        assert!(efficiency_surface(&[], &[0.5]).is_err());
        assert!(efficiency_surface(&[1], &[]).is_err());
    }

    #[test]
    fn seven_nines_halves_at_ten_million_cores() {
        let alpha = 0.9999999;
        let mut last = f64::INFINITY;
        let mut n = 100u64;
        while n <= 10_000_000 {
            let e = efficiency(n, alpha).unwrap();
            assert!(e < last, "efficiency must fall as cores grow");
            last = e;
            n *= 10;
        }
        let e = efficiency(10_000_000, alpha).unwrap();
        assert!((e - 0.5).abs() < 2e-2, "e = {e}");
    }

    #[test]
    fn one_percent_efficiency_point_exists() {
        // Bisect on alpha at N = 1e7 for E = 0.01.
        let n = 10_000_000u64;
        let (mut lo, mut hi) = (0.999, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if efficiency(n, mid).unwrap() < 0.01 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let e = efficiency(n, hi).unwrap();
        assert!((e - 0.01).abs() < 1e-4, "e = {e}");
        assert!((hi - 0.99999).abs() < 1e-4, "alpha = {hi}");
    }

    #[test]
    fn presets_are_ordered_best_first() {
        let [hpl, hpcg] = workload_presets();
        assert!(hpl.alpha > hpcg.alpha);
        for n in [10u64, 1000, 1_000_000] {
            let e_hpl = efficiency(n, hpl.alpha).unwrap();
            let e_hpcg = efficiency(n, hpcg.alpha).unwrap();
            assert!(e_hpl > e_hpcg, "separation must hold at N = {n}");
        }
    }

    #[test]
    fn csv_lists_every_point() {
        let grid = efficiency_surface(&[1, 10], &[0.5]).unwrap();
        let csv = surface_csv(&grid, &AnalysisConfig::default());
        assert!(csv.starts_with("# model=amdahl"));
        assert_eq!(csv.lines().count(), 2 + grid.len());
    }
}
