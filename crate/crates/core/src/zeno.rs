//! Entanglement protection by repeated nonselective measurements.
//!
//! Every `T` the pair is measured with an observable that distinguishes the
//! collective ground state `|00⟩` from the single-excitation subspace but not
//! `|10⟩` from `|01⟩`. The measurement disentangles the qubits from the
//! reservoir: the ground branch is discarded from the coherent dynamics and
//! the single-excitation branch restarts with the reservoir in vacuum. The
//! sub-radiant amplitude is untouched while the super-radiant amplitude picks
//! up a factor `E(T)` per interval, so its decay proceeds at the effective
//! rate `γ_z(T) = −ln E(T)² / T`, which vanishes as `T → 0`.

use crate::error::{invalid, Error, Result};
use crate::model::{
    pair_concurrence, survival_for_ratio, Amplitudes, BellBasis, CouplingSpec, InitialState,
    RegimeParams, ReservoirSpec,
};
use crate::scalar::{Amp, Real};

/// Periodic measurement protocol: `count` measurements spaced by `interval`
/// (in units of `1/λ`), ending at `count·interval`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSchedule<T> {
    interval: T,
    count: usize,
}

impl<T: Real> MeasurementSchedule<T> {
    pub fn new(interval: T, count: usize) -> Result<Self> {
        if !interval.is_finite() {
            return Err(Error::NonFinite("measurement interval"));
        }
        if interval <= T::zero() {
            return Err(invalid("interval", "must be positive"));
        }
        if count == 0 {
            return Err(invalid("count", "need at least one measurement"));
        }
        Ok(Self { interval, count })
    }

    /// Schedule with the largest number of measurements fitting in `total`.
    pub fn covering(interval: T, total: T) -> Result<Self> {
        if !(total.is_finite() && interval.is_finite()) || interval <= T::zero() {
            return Err(invalid("interval", "must be positive and finite"));
        }
        let n = ((total / interval).as_f64() + 1e-9).floor().max(1.0) as usize;
        Self::new(interval, n)
    }

    pub fn interval(&self) -> T {
        self.interval
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn total_time(&self) -> T {
        self.interval * T::from_count(self.count)
    }

    /// Whether the closed-form measured concurrence applies, i.e. `E(T) > 0`.
    /// For `E(T) < 0` use [`simulate_stroboscopic`].
    pub fn closed_form_valid(
        &self,
        reservoir: &ReservoirSpec<T>,
        coupling: &CouplingSpec<T>,
    ) -> bool {
        let big_r = RegimeParams::new(reservoir, coupling).big_r;
        survival_for_ratio(big_r, self.interval) > T::zero()
    }
}

/// Effective decay rate of the super-radiant population under measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoRate<T> {
    /// `γ_z(T) = −ln E(T)² / T`, in units of `λ`.
    pub rate: T,
    /// `E(T)`.
    pub survival: T,
    /// `E(T) < 0`: the interval falls past a zero of the survival amplitude.
    pub oscillatory: bool,
}

pub fn zeno_rate<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    interval: T,
) -> Result<ZenoRate<T>> {
    if !interval.is_finite() {
        return Err(Error::NonFinite("measurement interval"));
    }
    if interval <= T::zero() {
        return Err(invalid("interval", "must be positive"));
    }
    let big_r = RegimeParams::new(reservoir, coupling).big_r;
    let survival = survival_for_ratio(big_r, interval);
    if survival == T::zero() {
        return Err(Error::SurvivalZero(interval.as_f64()));
    }
    let rate = -T::lit(2.0) * survival.abs().ln() / interval;
    if !rate.is_finite() {
        return Err(Error::SurvivalZero(interval.as_f64()));
    }
    Ok(ZenoRate {
        rate,
        survival,
        oscillatory: survival < T::zero(),
    })
}

/// Super-radiant population `|β₊|² e^{−γ_z N T}` after the last measurement.
pub fn survival_probability_measured<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    schedule: &MeasurementSchedule<T>,
) -> Result<T> {
    let gz = zeno_rate(reservoir, coupling, schedule.interval)?;
    let beta = BellBasis::new(coupling, init);
    Ok(beta.beta_plus.norm_sqr() * (-gz.rate * schedule.total_time()).exp())
}

/// Concurrence at `t = N T`:
/// `2 |(β₊ r₁ e^{−γ_z t/2} + β₋ r₂)(β₊ r₂ e^{−γ_z t/2} − β₋ r₁)|`.
///
/// Uses `e^{−γ_z t/2} = |E(T)|^N` and therefore matches the stroboscopic
/// evolution only while `E(T) > 0`.
pub fn concurrence_measured<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    schedule: &MeasurementSchedule<T>,
) -> Result<T> {
    concurrence_measured_at(
        reservoir,
        coupling,
        init,
        schedule.interval,
        schedule.total_time(),
    )
}

/// Closed-form measured concurrence evaluated at an arbitrary `tau`, i.e. the
/// smooth envelope through the values at the measurement times.
pub fn concurrence_measured_at<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    interval: T,
    tau: T,
) -> Result<T> {
    let gz = zeno_rate(reservoir, coupling, interval)?;
    let beta = BellBasis::new(coupling, init);
    let decay = (-gz.rate * tau * T::lit(0.5)).exp();
    let (r1, r2) = (coupling.r1(), coupling.r2());
    let plus = beta.beta_plus * decay;
    let a = plus * r1 + beta.beta_minus * r2;
    let b = plus * r2 - beta.beta_minus * r1;
    Ok(T::lit(2.0) * (a * b).norm())
}

/// State of the measured system at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StroboscopicSample<T> {
    /// Unnormalized single-excitation branch.
    pub amplitudes: Amplitudes<T>,
    /// Concurrence of the full (branch + ground) mixture.
    pub concurrence: T,
    /// Probability of finding both qubits in `|00⟩`.
    pub ground_population: T,
}

/// Explicit measurement-by-measurement evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct StroboscopicRun<T> {
    coupling: CouplingSpec<T>,
    big_r: T,
    schedule: MeasurementSchedule<T>,
    /// Branch amplitudes right after measurement `k` (index 0 is the
    /// initial state).
    branches: Vec<(Amp<T>, Amp<T>)>,
}

/// Applies the nonselective measurement map every `T`: evolve the branch for
/// one interval with the closed form, keep the single-excitation amplitudes
/// without renormalizing, reset the reservoir, repeat.
pub fn simulate_stroboscopic<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    schedule: &MeasurementSchedule<T>,
) -> Result<StroboscopicRun<T>> {
    let big_r = RegimeParams::new(reservoir, coupling).big_r;
    if !big_r.is_finite() {
        return Err(Error::NonFinite("bigR"));
    }
    let survival = survival_for_ratio(big_r, schedule.interval);
    let mut branches = Vec::with_capacity(schedule.count + 1);
    let mut branch = (init.c01(), init.c02());
    branches.push(branch);
    for _ in 0..schedule.count {
        let beta = BellBasis::decompose(coupling, branch.0, branch.1);
        branch = beta.recombine(coupling, survival);
        branches.push(branch);
    }
    Ok(StroboscopicRun {
        coupling: *coupling,
        big_r,
        schedule: *schedule,
        branches,
    })
}

impl<T: Real> StroboscopicRun<T> {
    pub fn schedule(&self) -> &MeasurementSchedule<T> {
        &self.schedule
    }

    /// Branch amplitudes right after each measurement, `k = 0..=N`.
    pub fn branches(&self) -> &[(Amp<T>, Amp<T>)] {
        &self.branches
    }

    /// Concurrence right after each measurement, `k = 0..=N`.
    pub fn measurement_concurrence(&self) -> Vec<T> {
        self.branches
            .iter()
            .map(|&(a, b)| pair_concurrence(a, b))
            .collect()
    }

    /// Population sent to `|00⟩` by each measurement, `k = 1..=N`.
    pub fn ground_population_per_interval(&self) -> Vec<T> {
        self.branches
            .windows(2)
            .map(|w| {
                let before = w[0].0.norm_sqr() + w[0].1.norm_sqr();
                let after = w[1].0.norm_sqr() + w[1].1.norm_sqr();
                before - after
            })
            .collect()
    }

    /// State at `tau ∈ [0, N T]`, evolving from the last measurement.
    pub fn sample(&self, tau: T) -> Result<StroboscopicSample<T>> {
        if !tau.is_finite() {
            return Err(Error::NonFinite("tau"));
        }
        if tau < T::zero() {
            return Err(Error::NegativeTime(tau.as_f64()));
        }
        let end = self.schedule.total_time();
        if tau > end * (T::one() + T::epsilon() * T::lit(16.0)) {
            return Err(invalid(
                "tau",
                format!("{tau} lies past the last measurement at {end}"),
            ));
        }
        let interval = self.schedule.interval;
        let k = (tau / interval)
            .floor()
            .to_usize()
            .unwrap_or(0)
            .min(self.schedule.count);
        let local = (tau - T::from_count(k) * interval).max(T::zero());
        let (c1, c2) = self.branches[k];
        let beta = BellBasis::decompose(&self.coupling, c1, c2);
        let (c1, c2) = beta.recombine(&self.coupling, survival_for_ratio(self.big_r, local));
        let excited = c1.norm_sqr() + c2.norm_sqr();
        Ok(StroboscopicSample {
            amplitudes: Amplitudes::new(c1, c2, tau),
            concurrence: pair_concurrence(c1, c2),
            ground_population: T::one() - excited,
        })
    }

    /// Samples `per_interval` evenly spaced points in every interval, plus
    /// the final measurement time.
    pub fn trajectory(&self, per_interval: usize) -> Result<Vec<StroboscopicSample<T>>> {
        let per = per_interval.max(1);
        let step = self.schedule.interval / T::from_count(per);
        let total = per * self.schedule.count;
        (0..=total)
            .map(|i| self.sample(T::from_count(i) * step))
            .collect()
    }
}
