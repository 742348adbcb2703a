//! Closed-form energies along one parameter, and level crossings between
//! pairs of labeled states.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{energy, ModelKind};
use crate::params::{PhysicalParams, QuantumState};

pub const DEFAULT_SCAN_STEPS: usize = 2001;

/// Parameters a sweep can run over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SweepParam {
    Beta,
    B0,
    AlphaAb,
    Mu,
    Delta,
}

impl SweepParam {
    pub const ALL: [SweepParam; 5] =
        [SweepParam::Beta, SweepParam::B0, SweepParam::AlphaAb, SweepParam::Mu, SweepParam::Delta];

    pub fn key(self) -> &'static str {
        match self {
            SweepParam::Beta => "beta",
            SweepParam::B0 => "b0",
            SweepParam::AlphaAb => "alpha_ab",
            SweepParam::Mu => "mu",
            SweepParam::Delta => "delta",
        }
    }

    pub fn apply(self, params: &PhysicalParams, value: f64) -> PhysicalParams {
        let mut p = *params;
        p.set(self.key(), value);
        p
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for SweepParam {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "beta" => Ok(SweepParam::Beta),
            "b0" => Ok(SweepParam::B0),
            "alpha_ab" | "alpha" => Ok(SweepParam::AlphaAb),
            "mu" => Ok(SweepParam::Mu),
            "delta" => Ok(SweepParam::Delta),
            _ => Err(format!("cannot sweep `{s}`, expected one of beta, b0, alpha_ab, mu, delta")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub kind: ModelKind,
    pub states: Vec<QuantumState>,
    pub param: SweepParam,
    pub range: (f64, f64),
    pub steps: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidSweep(format!("range [{lo}, {hi}] must satisfy lo < hi")));
        }
        if self.steps < 2 {
            return Err(Error::InvalidSweep(format!("need at least 2 steps, got {}", self.steps)));
        }
        if self.states.is_empty() {
            return Err(Error::InvalidSweep("no states given".into()));
        }
        if !self.kind.depends_on(self.param.key()) {
            return Err(Error::InvalidSweep(format!("model {} does not depend on {}", self.kind, self.param)));
        }
        Ok(())
    }

    /// The sampled parameter values, endpoints included.
    pub fn values(&self) -> Vec<f64> {
        linspace(self.range, self.steps)
    }
}

fn linspace((lo, hi): (f64, f64), steps: usize) -> Vec<f64> {
    let last = (steps - 1) as f64;
    (0..steps).map(|i| if i + 1 == steps { hi } else { lo + (hi - lo) * i as f64 / last }).collect()
}

/// One sweep row; `energy` is `None` where the state is not a valid bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub value: f64,
    pub state: QuantumState,
    pub energy: Option<f64>,
}

/// Energies of every state at every grid point, ordered by (value, state).
pub fn sweep(spec: &SweepSpec, params: &PhysicalParams) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    params.validate()?;
    let mut states = spec.states.clone();
    states.sort();
    states.dedup();
    let rows = spec
        .values()
        .into_par_iter()
        .flat_map_iter(|value| {
            let p = spec.param.apply(params, value);
            states
                .iter()
                .map(move |&state| SweepRow { value, state, energy: energy(spec.kind, &state, &p).ok() })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(rows)
}

/// A parameter value where two labeled levels meet.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossingPoint {
    pub param_value: f64,
    pub energy: f64,
    pub state_pair: (QuantumState, QuantumState),
    pub bracket_width: f64,
}

/// Tolerance |E₁ − E₂| ≤ 1e−9·max(1, |E|) a crossing has to meet.
pub fn crossing_tolerance(energy: f64) -> f64 {
    1e-9 * energy.abs().max(1.0)
}

/// Sign changes of E_{s1} − E_{s2} on `scan_steps` points, each refined by
/// bisection. Brackets touching an invalid point are skipped.
pub fn find_crossings(
    kind: ModelKind,
    s1: QuantumState,
    s2: QuantumState,
    param: SweepParam,
    range: (f64, f64),
    params: &PhysicalParams,
    scan_steps: usize,
) -> Result<Vec<CrossingPoint>> {
    if s1 == s2 {
        return Err(Error::SameState);
    }
    let spec = SweepSpec { kind, states: vec![s1, s2], param, range, steps: scan_steps };
    spec.validate()?;
    params.validate()?;
    let gap = |value: f64| -> Option<(f64, f64)> {
        let p = param.apply(params, value);
        let e1 = energy(kind, &s1, &p).ok()?;
        let e2 = energy(kind, &s2, &p).ok()?;
        Some((e1 - e2, 0.5 * (e1 + e2)))
    };
    let values = spec.values();
    let gaps: Vec<Option<(f64, f64)>> = values.par_iter().map(|&v| gap(v)).collect();

    let mut out = Vec::new();
    for i in 0..values.len() - 1 {
        let (Some((g_lo, _)), Some((g_hi, _))) = (gaps[i], gaps[i + 1]) else { continue };
        if g_lo == 0.0 {
            let (_, e) = gaps[i].unwrap();
            out.push(CrossingPoint { param_value: values[i], energy: e, state_pair: (s1, s2), bracket_width: 0.0 });
            continue;
        }
        if g_lo * g_hi >= 0.0 {
            continue;
        }
        if let Some(c) = refine(&gap, values[i], values[i + 1], g_lo) {
            out.push(CrossingPoint { state_pair: (s1, s2), ..c });
        }
    }
    if let Some((g, e)) = gaps[values.len() - 1] {
        if g == 0.0 {
            out.push(CrossingPoint {
                param_value: values[values.len() - 1],
                energy: e,
                state_pair: (s1, s2),
                bracket_width: 0.0,
            });
        }
    }
    Ok(out)
}

fn refine(gap: &impl Fn(f64) -> Option<(f64, f64)>, mut lo: f64, mut hi: f64, g_lo: f64) -> Option<CrossingPoint> {
    let sign_lo = g_lo.signum();
    loop {
        let mid = 0.5 * (lo + hi);
        let (g, e) = gap(mid)?;
        let done = (hi - lo) <= 1e-10 && g.abs() <= crossing_tolerance(e);
        if g == 0.0 || done || mid <= lo || mid >= hi {
            let placeholder = QuantumState::new(0, 0);
            return Some(CrossingPoint {
                param_value: mid,
                energy: e,
                state_pair: (placeholder, placeholder),
                bracket_width: hi - lo,
            });
        }
        if g.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model_a_base() -> PhysicalParams {
        PhysicalParams { kz: 1.0, ..Default::default() }
    }

    #[test]
    fn model_a_rows_all_valid() {
        let spec = SweepSpec {
            kind: ModelKind::A,
            states: vec![QuantumState::new(0, 1), QuantumState::new(1, 0)],
            param: SweepParam::Beta,
            range: (-2.0, 2.0),
            steps: 41,
        };
        let rows = sweep(&spec, &PhysicalParams::default()).unwrap();
        assert_eq!(rows.len(), 82);
        assert!(rows.iter().all(|r| r.energy.is_some()));
        assert!(rows.windows(2).all(|w| (w[0].value, w[0].state) < (w[1].value, w[1].state)));
    }

    #[test]
    fn model_b_has_invalid_rows() {
        let p = PhysicalParams { kz: 0.25, beta: -2.0, alpha_ab: -1.0, ..Default::default() };
        let spec = SweepSpec {
            kind: ModelKind::B,
            states: vec![QuantumState::new(1, 0)],
            param: SweepParam::Mu,
            range: (0.1, 1.5),
            steps: 57,
        };
        let rows = sweep(&spec, &p).unwrap();
        assert!(rows.iter().any(|r| r.energy.is_none()));
        assert!(rows.iter().any(|r| r.energy.is_some()));
    }

    #[test]
    fn degenerate_specs_rejected() {
        let mut spec = SweepSpec {
            kind: ModelKind::A,
            states: vec![QuantumState::new(0, 0)],
            param: SweepParam::Beta,
            range: (1.0, 1.0),
            steps: 10,
        };
        assert!(sweep(&spec, &PhysicalParams::default()).is_err());
        spec.range = (0.0, 1.0);
        spec.steps = 1;
        assert!(sweep(&spec, &PhysicalParams::default()).is_err());
        spec.steps = 10;
        spec.param = SweepParam::Delta;
        assert!(matches!(sweep(&spec, &PhysicalParams::default()), Err(Error::InvalidSweep(_))));
    }

    #[test]
    fn model_a_beta_crossing() {
        let found = find_crossings(
            ModelKind::A,
            QuantumState::new(0, 1),
            QuantumState::new(0, 2),
            SweepParam::Beta,
            (0.0, 4.0),
            &model_a_base(),
            DEFAULT_SCAN_STEPS,
        )
        .unwrap();
        assert_eq!(found.len(), 1);
        let c = found[0];
        assert!((c.param_value - (3.0 - 0.75f64.sqrt())).abs() < 1e-8);
        assert!(c.bracket_width <= 1e-10);
        let p = SweepParam::Beta.apply(&model_a_base(), c.param_value);
        let e1 = energy(ModelKind::A, &QuantumState::new(0, 1), &p).unwrap();
        let e2 = energy(ModelKind::A, &QuantumState::new(0, 2), &p).unwrap();
        assert!((e1 - e2).abs() <= crossing_tolerance(c.energy));
    }

    #[test]
    fn same_m_never_crosses() {
        let found = find_crossings(
            ModelKind::A,
            QuantumState::new(0, 1),
            QuantumState::new(2, 1),
            SweepParam::Beta,
            (-3.0, 3.0),
            &model_a_base(),
            201,
        )
        .unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn same_state_rejected() {
        let s = QuantumState::new(0, 1);
        let err = find_crossings(ModelKind::A, s, s, SweepParam::Beta, (0.0, 1.0), &model_a_base(), 10);
        assert_eq!(err, Err(Error::SameState));
    }

    #[test]
    fn refinement_keeps_crossings() {
        let run = |steps| {
            find_crossings(
                ModelKind::A,
                QuantumState::new(1, 0),
                QuantumState::new(2, 1),
                SweepParam::AlphaAb,
                (-2.0, 2.0),
                &model_a_base(),
                steps,
            )
            .unwrap()
        };
        let coarse = run(101);
        let fine = run(201);
        assert!(!coarse.is_empty());
        for c in &coarse {
            assert!(fine.iter().any(|f| (f.param_value - c.param_value).abs() < 1e-8));
        }
    }

    #[test]
    fn param_parsing() {
        assert_eq!("alpha".parse::<SweepParam>().unwrap(), SweepParam::AlphaAb);
        assert!("kz".parse::<SweepParam>().is_err());
    }
}
