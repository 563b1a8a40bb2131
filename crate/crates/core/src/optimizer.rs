//! Constrained derivative-free search over each pipeline's free parameters:
//! Latin-hypercube seeding, Nelder–Mead restarts, and a final coordinate
//! polish. Every candidate is scored through the real certification pipeline
//! (hi endpoint of the certified constant), so the reported optimum is
//! certified by construction; infeasible points score +∞.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::prop::{b1_of, b3_of, PropParamsA, PropParamsB};
use crate::rigor::Interval;
use crate::thm1::{certify, Thm1Params};
use crate::thm2::{q1, q2, Thm2Params};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Thm1A6,
    PropB1a,
    PropB1b,
    PropB3,
    Thm2Q1,
    Thm2Q2,
}

impl std::str::FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "thm1_a6" | "thm1_A6" => Objective::Thm1A6,
            "prop_b1a" | "prop_B1a" => Objective::PropB1a,
            "prop_b1b" | "prop_B1b" => Objective::PropB1b,
            "prop_b3" | "prop_B3" => Objective::PropB3,
            "thm2_q1" | "thm2_Q1" => Objective::Thm2Q1,
            "thm2_q2" | "thm2_Q2" => Objective::Thm2Q2,
            other => return Err(Error::Invalid(format!("unknown objective {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimSpec {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub scale: Scale,
    #[serde(default)]
    pub integer: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchSpace {
    pub dims: Vec<DimSpec>,
}

impl SearchSpace {
    /// Default box around each objective's published parameter point.
    pub fn default_for(objective: Objective) -> SearchSpace {
        let dim = |name: &str, lo: f64, hi: f64, scale: Scale, integer: bool| DimSpec {
            name: name.into(),
            lo,
            hi,
            scale,
            integer,
        };
        let dims = match objective {
            Objective::Thm1A6 => vec![
                dim("eta3", 0.3, 2.5, Scale::Linear, false),
                dim("h1", 1.0005, 1.2, Scale::Log, false),
                dim("h2", 0.55, 1.05, Scale::Linear, false),
                dim("log_t0", 990.0 / 7.0 + 1.0, 20000.0, Scale::Log, false),
            ],
            Objective::PropB1a => vec![
                dim("log_t1", 16.0, 16.0, Scale::Linear, false),
                dim("eta", 0.3, 4.0, Scale::Linear, false),
                dim("q0", 1.0, 5.0, Scale::Linear, true),
            ],
            Objective::PropB1b => vec![
                dim("log_t1", 82.0, 82.0, Scale::Linear, false),
                dim("eta", 0.3, 4.0, Scale::Linear, false),
                dim("q0", 1.0, 60.0, Scale::Linear, true),
            ],
            Objective::PropB3 => vec![
                dim("log_t2", 93.0, 93.0, Scale::Linear, false),
                dim("eta3", 0.5, 3.0, Scale::Linear, false),
                dim("eta4", 0.5, 4.0, Scale::Linear, false),
                dim("h1p", 1.01, 1.5, Scale::Log, false),
                dim("q0", 2.0, 200.0, Scale::Log, true),
                dim("s0", 2.0, 500.0, Scale::Log, true),
                dim("mu5", 1.5, 200.0, Scale::Log, false),
                dim("mu6", 1.1, 200.0, Scale::Log, false),
            ],
            Objective::Thm2Q1 | Objective::Thm2Q2 => vec![
                dim("t0", 500.0, 500.0, Scale::Linear, false),
                dim("eps", 0.05, 1.0, Scale::Linear, false),
                dim("c_scale", 0.05, 1.0, Scale::Linear, false),
                dim("d", 0.001, 0.2, Scale::Log, false),
                dim("d1", 0.0005, 0.4, Scale::Log, false),
            ],
        };
        SearchSpace { dims }
    }

    fn clamp(&self, x: &mut [f64]) {
        for (v, d) in x.iter_mut().zip(&self.dims) {
            *v = v.clamp(d.lo, d.hi);
            if d.integer {
                *v = v.round().clamp(d.lo, d.hi);
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub objective: Objective,
    pub best_params: BTreeMap<String, f64>,
    /// certified enclosure of the objective at the best point
    pub best_value: Interval,
    pub evals: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trajectory: Option<Vec<(usize, f64)>>,
}

/// Certified objective value at a parameter vector (hi endpoint), or the name
/// of the violated constraint.
pub fn evaluate(objective: Objective, x: &[f64]) -> std::result::Result<Interval, String> {
    let named_err = |e: Error| match e {
        Error::Precondition { name, .. } | Error::Unproven { name, .. } => name,
        other => other.to_string(),
    };
    match objective {
        Objective::Thm1A6 => {
            let mut p = Thm1Params::new(
                Interval::point(x[0]),
                Interval::point(x[1]),
                Interval::point(x[2]),
                Interval::point(x[3]),
            );
            p.k_cap = 1000;
            certify(&p).map(|c| c.a6).map_err(named_err)
        }
        Objective::PropB1a | Objective::PropB1b => {
            let p = PropParamsA {
                log_t1: Interval::point(x[0]),
                eta: Interval::point(x[1]),
                q0: x[2].round().max(1.0) as u32,
            };
            b1_of(&p).map(|r| r.constant).map_err(named_err)
        }
        Objective::PropB3 => {
            let p = PropParamsB {
                log_t2: Interval::point(x[0]),
                eta3: Interval::point(x[1]),
                eta4: Interval::point(x[2]),
                h1p: Interval::point(x[3]),
                q0: x[4].round().max(1.0) as u32,
                s0: x[5].round().max(1.0) as u32,
                mu5: Interval::point(x[6]),
                mu6: Interval::point(x[7]),
            };
            b3_of(&p).map(|r| r.b3).map_err(named_err)
        }
        Objective::Thm2Q1 | Objective::Thm2Q2 => {
            let c_cap = crate::thm2::e2_over_8_floor().lo_f64();
            let p = Thm2Params {
                t0: Interval::point(x[0]),
                eps: Interval::point(x[1]),
                c: Interval::point(x[2] * c_cap),
                d: Interval::point(x[3]),
                d1: Interval::point(x[4]),
            };
            let c1 = q1(&p).map_err(named_err)?;
            if objective == Objective::Thm2Q1 {
                Ok(c1.q1)
            } else {
                q2(&p, &c1.q1).map_err(named_err)
            }
        }
    }
}

struct Scorer {
    objective: Objective,
    evals: usize,
    budget: usize,
    violations: BTreeMap<String, usize>,
    best: Option<(f64, Vec<f64>)>,
    trajectory: Vec<(usize, f64)>,
}

impl Scorer {
    fn score(&mut self, space: &SearchSpace, x: &[f64]) -> f64 {
        if self.evals >= self.budget {
            return f64::INFINITY;
        }
        let mut xx = x.to_vec();
        space.clamp(&mut xx);
        self.evals += 1;
        match evaluate(self.objective, &xx) {
            Ok(v) => {
                let val = v.hi_f64();
                let better = self.best.as_ref().map_or(true, |(b, bx)| {
                    val < *b || (val == *b && xx < *bx)
                });
                if better {
                    self.best = Some((val, xx));
                    self.trajectory.push((self.evals, val));
                }
                val
            }
            Err(name) => {
                *self.violations.entry(name).or_insert(0) += 1;
                f64::INFINITY
            }
        }
    }
}

/// Deterministic constrained minimization of a certified objective.
pub fn optimize(
    objective: Objective,
    space: &SearchSpace,
    budget: usize,
    seed: u64,
    keep_trajectory: bool,
) -> Result<SearchResult> {
    if budget < 1 {
        return Err(Error::Invalid("budget must be >= 1".into()));
    }
    let n = space.dims.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scorer = Scorer {
        objective,
        evals: 0,
        budget,
        violations: BTreeMap::new(),
        best: None,
        trajectory: Vec::new(),
    };

    // Latin hypercube seeding
    let n_seed = (budget / 4).clamp(1, 40 * n.max(1));
    let mut strata: Vec<Vec<usize>> = (0..n)
        .map(|_| {
            let mut idx: Vec<usize> = (0..n_seed).collect();
            for i in (1..idx.len()).rev() {
                let j = rng.gen_range(0..=i);
                idx.swap(i, j);
            }
            idx
        })
        .collect();
    let mut seeds: Vec<(f64, Vec<f64>)> = Vec::new();
    for s in 0..n_seed {
        let x: Vec<f64> = (0..n)
            .map(|d| {
                let u = (strata[d][s] as f64 + rng.gen::<f64>()) / n_seed as f64;
                from_unit(&space.dims[d], u)
            })
            .collect();
        let v = scorer.score(space, &x);
        seeds.push((v, x));
    }
    strata.clear();
    seeds.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.partial_cmp(&b.1).unwrap()));

    // Nelder–Mead restarts from the best feasible seeds
    let restarts: Vec<Vec<f64>> = seeds
        .iter()
        .filter(|(v, _)| v.is_finite())
        .take(3)
        .map(|(_, x)| x.clone())
        .collect();
    for x0 in restarts {
        nelder_mead(space, &mut scorer, &x0);
    }
    // coordinate polish around the incumbent
    if let Some((_, x0)) = scorer.best.clone() {
        coordinate_polish(space, &mut scorer, &x0);
    }

    match scorer.best.clone() {
        Some((_, x)) => {
            let value = evaluate(objective, &x)
                .map_err(|name| Error::Invalid(format!("best point failed re-certification: {name}")))?;
            let best_params = space
                .dims
                .iter()
                .zip(&x)
                .map(|(d, v)| (d.name.clone(), *v))
                .collect();
            Ok(SearchResult {
                objective,
                best_params,
                best_value: value,
                evals: scorer.evals,
                seed,
                trajectory: if keep_trajectory { Some(scorer.trajectory) } else { None },
            })
        }
        None => Err(Error::NoFeasiblePoint {
            histogram: scorer.violations.into_iter().collect(),
        }),
    }
}

/// Optimize starting from an explicit point (the point itself is scored
/// first, so the result can never regress past it).
pub fn optimize_seeded(
    objective: Objective,
    space: &SearchSpace,
    x0: &[f64],
    budget: usize,
    seed: u64,
) -> Result<SearchResult> {
    let mut scorer = Scorer {
        objective,
        evals: 0,
        budget,
        violations: BTreeMap::new(),
        best: None,
        trajectory: Vec::new(),
    };
    scorer.score(space, x0);
    nelder_mead(space, &mut scorer, x0);
    if let Some((_, xb)) = scorer.best.clone() {
        coordinate_polish(space, &mut scorer, &xb);
    }
    let _ = seed;
    match scorer.best.clone() {
        Some((_, x)) => {
            let value = evaluate(objective, &x)
                .map_err(|name| Error::Invalid(format!("best point failed re-certification: {name}")))?;
            Ok(SearchResult {
                objective,
                best_params: space.dims.iter().zip(&x).map(|(d, v)| (d.name.clone(), *v)).collect(),
                best_value: value,
                evals: scorer.evals,
                seed,
                trajectory: None,
            })
        }
        None => Err(Error::NoFeasiblePoint { histogram: scorer.violations.into_iter().collect() }),
    }
}

fn from_unit(dim: &DimSpec, u: f64) -> f64 {
    let v = match dim.scale {
        Scale::Linear => dim.lo + (dim.hi - dim.lo) * u,
        Scale::Log => dim.lo * (dim.hi / dim.lo).powf(u),
    };
    if dim.integer {
        v.round()
    } else {
        v
    }
}

fn nelder_mead(space: &SearchSpace, scorer: &mut Scorer, x0: &[f64]) {
    let n = x0.len();
    if n == 0 {
        return;
    }
    let mut simplex: Vec<(f64, Vec<f64>)> = Vec::with_capacity(n + 1);
    let f0 = scorer.score(space, x0);
    simplex.push((f0, x0.to_vec()));
    for d in 0..n {
        let mut x = x0.to_vec();
        let span = space.dims[d].hi - space.dims[d].lo;
        let step = if span > 0.0 { span * 0.02 } else { x[d].abs() * 0.01 + 1e-6 };
        x[d] = (x[d] + step).clamp(space.dims[d].lo, space.dims[d].hi);
        if (x[d] - x0[d]).abs() < 1e-15 {
            x[d] = (x0[d] - step).clamp(space.dims[d].lo, space.dims[d].hi);
        }
        let f = scorer.score(space, &x);
        simplex.push((f, x));
    }
    let max_iter = 400;
    for _ in 0..max_iter {
        if scorer.evals >= scorer.budget {
            return;
        }
        simplex.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.partial_cmp(&b.1).unwrap()));
        let spread = simplex[n].0 - simplex[0].0;
        if spread.abs() < 1e-14 && simplex[0].0.is_finite() {
            return;
        }
        let centroid: Vec<f64> = (0..n)
            .map(|d| simplex[..n].iter().map(|(_, x)| x[d]).sum::<f64>() / n as f64)
            .collect();
        let worst = simplex[n].clone();
        let reflect: Vec<f64> = (0..n).map(|d| centroid[d] + (centroid[d] - worst.1[d])).collect();
        let fr = scorer.score(space, &reflect);
        if fr < simplex[0].0 {
            let expand: Vec<f64> =
                (0..n).map(|d| centroid[d] + 2.0 * (centroid[d] - worst.1[d])).collect();
            let fe = scorer.score(space, &expand);
            simplex[n] = if fe < fr { (fe, expand) } else { (fr, reflect) };
        } else if fr < simplex[n - 1].0 {
            simplex[n] = (fr, reflect);
        } else {
            let contract: Vec<f64> =
                (0..n).map(|d| centroid[d] + 0.5 * (worst.1[d] - centroid[d])).collect();
            let fc = scorer.score(space, &contract);
            if fc < worst.0 {
                simplex[n] = (fc, contract);
            } else {
                // shrink toward the best vertex
                let best = simplex[0].1.clone();
                for v in simplex.iter_mut().skip(1) {
                    let x: Vec<f64> =
                        (0..n).map(|d| best[d] + 0.5 * (v.1[d] - best[d])).collect();
                    let f = scorer.score(space, &x);
                    *v = (f, x);
                }
            }
        }
    }
}

fn coordinate_polish(space: &SearchSpace, scorer: &mut Scorer, x0: &[f64]) {
    let mut x = x0.to_vec();
    let mut fbest = scorer.score(space, &x);
    for _round in 0..3 {
        for d in 0..x.len() {
            if space.dims[d].integer {
                for delta in [-1.0, 1.0] {
                    let mut y = x.clone();
                    y[d] += delta;
                    let f = scorer.score(space, &y);
                    if f < fbest {
                        fbest = f;
                        x = y;
                    }
                }
                continue;
            }
            let span = (space.dims[d].hi - space.dims[d].lo).max(x[d].abs() * 0.1);
            for rel in [1e-3, 1e-5] {
                for sign in [-1.0, 1.0] {
                    let mut y = x.clone();
                    y[d] += sign * rel * span;
                    let f = scorer.score(space, &y);
                    if f < fbest {
                        fbest = f;
                        x = y;
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SlopeRow {
    pub name: String,
    pub slope: f64,
    pub one_sided: bool,
}

/// Central finite differences of the certified objective per dimension.
pub fn sensitivity(
    objective: Objective,
    space: &SearchSpace,
    params: &[f64],
    radius: f64,
) -> Result<Vec<SlopeRow>> {
    let f0 = evaluate(objective, params)
        .map_err(|name| Error::Precondition {
            name,
            outcome: crate::rigor::CertOutcome { status: crate::rigor::CertStatus::Refuted, margin: -1.0 },
        })?
        .hi_f64();
    let mut rows = Vec::new();
    for (d, dim) in space.dims.iter().enumerate() {
        if dim.integer {
            rows.push(SlopeRow { name: dim.name.clone(), slope: 0.0, one_sided: true });
            continue;
        }
        let h = params[d].abs().max(1e-9) * radius;
        if h == 0.0 {
            rows.push(SlopeRow { name: dim.name.clone(), slope: 0.0, one_sided: false });
            continue;
        }
        let mut xp = params.to_vec();
        xp[d] += h;
        let mut xm = params.to_vec();
        xm[d] -= h;
        let fp = evaluate(objective, &xp).ok().map(|v| v.hi_f64());
        let fm = evaluate(objective, &xm).ok().map(|v| v.hi_f64());
        let (slope, one_sided) = match (fp, fm) {
            (Some(p), Some(m)) => ((p - m) / (2.0 * h), false),
            (Some(p), None) => ((p - f0) / h, true),
            (None, Some(m)) => ((f0 - m) / h, true),
            (None, None) => (f64::NAN, true),
        };
        rows.push(SlopeRow { name: dim.name.clone(), slope, one_sided });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_x() -> Vec<f64> {
        vec![0.8410538348318537, 1.0072318915891114, 0.8643140421215492, 3069.0]
    }

    #[test]
    fn determinism() {
        let space = SearchSpace::default_for(Objective::PropB1a);
        let a = optimize(Objective::PropB1a, &space, 60, 7, true).unwrap();
        let b = optimize(Objective::PropB1a, &space, 60, 7, true).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn non_regression_seeded_at_paper_point() {
        let space = SearchSpace::default_for(Objective::Thm1A6);
        let r = optimize_seeded(Objective::Thm1A6, &space, &paper_x(), 40, 1).unwrap();
        let at_paper = evaluate(Objective::Thm1A6, &paper_x()).unwrap();
        assert!(r.best_value.hi_f64() <= at_paper.hi_f64() + 1e-15);
    }

    #[test]
    fn feasibility_of_reported_best() {
        let space = SearchSpace::default_for(Objective::Thm2Q1);
        let r = optimize(Objective::Thm2Q1, &space, 80, 3, false).unwrap();
        let x: Vec<f64> = space.dims.iter().map(|d| r.best_params[&d.name]).collect();
        assert!(evaluate(Objective::Thm2Q1, &x).is_ok());
    }

    #[test]
    fn sensitivity_zero_perturbation_and_signs() {
        let space = SearchSpace::default_for(Objective::Thm1A6);
        let r1 = sensitivity(Objective::Thm1A6, &space, &paper_x(), 1e-4).unwrap();
        let r2 = sensitivity(Objective::Thm1A6, &space, &paper_x(), 1e-5).unwrap();
        for (a, b) in r1.iter().zip(&r2) {
            assert!(a.slope.is_finite());
            if a.slope.abs() > 1e-4 && b.slope.abs() > 1e-4 {
                assert_eq!(a.slope.signum(), b.slope.signum(), "dim {}", a.name);
            }
        }
    }

    #[test]
    fn infeasible_budget_histogram() {
        // a space that is entirely infeasible (h2 above 1/log 2)
        let space = SearchSpace {
            dims: vec![
                DimSpec { name: "eta3".into(), lo: 0.8, hi: 0.9, scale: Scale::Linear, integer: false },
                DimSpec { name: "h1".into(), lo: 1.005, hi: 1.01, scale: Scale::Log, integer: false },
                DimSpec { name: "h2".into(), lo: 1.6, hi: 1.9, scale: Scale::Linear, integer: false },
                DimSpec { name: "log_t0".into(), lo: 3000.0, hi: 3100.0, scale: Scale::Log, integer: false },
            ],
        };
        match optimize(Objective::Thm1A6, &space, 12, 5, false) {
            Err(Error::NoFeasiblePoint { histogram }) => {
                assert!(!histogram.is_empty());
                assert!(histogram.iter().any(|(n, _)| n.contains("h2")));
            }
            other => panic!("expected NoFeasiblePoint, got {other:?}"),
        }
    }
}
