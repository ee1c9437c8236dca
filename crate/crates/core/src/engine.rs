//! Chemical reaction optimization driver.
//!
//! A population of molecules, each holding a solution (its potential energy
//! is the solution cost) and kinetic energy, evolves through four elementary
//! reactions until the evaluation budget runs out:
//!
//! * on-wall collision: one molecule, one neighborhood search;
//! * decomposition: one molecule splits into two heavily perturbed copies;
//! * inter-molecular collision: two molecules each take a neighborhood step;
//! * synthesis: two molecules merge into one.
//!
//! Every reaction conserves `sum(pe + ke) + buffer` exactly; see
//! [`crate::energy`] for the fixed-point representation.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::energy::{Energy, Fraction};
use crate::error::{Error, Result};
use crate::instance::{evaluate_cost, Cost, Cover, Instance, Solution};
use crate::operators::{decompose_with, synthesize_with_costs, Initializer, NeighborhoodOp};

/// Evaluations per column in the default budget.
pub const FE_PER_COLUMN: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub pop_size: usize,
    pub init_ke: f64,
    pub init_buffer: f64,
    /// Probability of a unimolecular reaction.
    pub collision_rate: f64,
    /// Lower bound of the kinetic energy fraction kept after an on-wall
    /// collision.
    pub ke_loss_rate: f64,
    /// Decomposition when `num_hit - min_hit` exceeds this.
    pub dec_threshold: u64,
    /// Synthesis when both molecules have `ke` at most this.
    pub syn_threshold: f64,
    /// Evaluation budget; `None` means `n * 1000`.
    pub fe_limit: Option<u64>,
    /// Whether the initial population's evaluations count toward the budget.
    pub count_initial_evaluations: bool,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            pop_size: 10,
            init_ke: 1000.0,
            init_buffer: 10000.0,
            collision_rate: 0.1,
            ke_loss_rate: 0.1,
            dec_threshold: 10000,
            syn_threshold: 1000.0,
            fe_limit: None,
            count_initial_evaluations: true,
        }
    }
}

impl Params {
    pub fn fe_limit_for(&self, instance: &Instance) -> u64 {
        self.fe_limit
            .unwrap_or(instance.columns() as u64 * FE_PER_COLUMN)
    }

    pub fn validate(&self) -> Result<()> {
        if self.pop_size == 0 {
            return Err(Error::InvalidParam("pop_size must be at least 1".into()));
        }
        for (name, v) in [
            ("collision_rate", self.collision_rate),
            ("ke_loss_rate", self.ke_loss_rate),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParam(format!(
                    "{name} must lie in [0, 1], got {v}"
                )));
            }
        }
        for (name, v) in [
            ("init_ke", self.init_ke),
            ("init_buffer", self.init_buffer),
            ("syn_threshold", self.syn_threshold),
        ] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::InvalidParam(format!(
                    "{name} must be nonnegative, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// The algorithm variants sharing this engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Reverse cumulative initializer, perturbation heuristic.
    Hcro,
    /// Random pick initializer, perturbation heuristic.
    HcroIr,
    /// Reverse cumulative initializer, remove-repair search.
    HcroNr,
}

impl Variant {
    pub fn initializer(self) -> Initializer {
        match self {
            Variant::HcroIr => Initializer::RandomPick,
            Variant::Hcro | Variant::HcroNr => Initializer::ReverseCumulative,
        }
    }

    pub fn neighborhood(self) -> NeighborhoodOp {
        match self {
            Variant::HcroNr => NeighborhoodOp::RemoveRepair,
            Variant::Hcro | Variant::HcroIr => NeighborhoodOp::Perturbation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Molecule {
    pub solution: Solution,
    pub pe: Cost,
    pub ke: Energy,
    pub num_hit: u64,
    pub min_hit: u64,
    pub min_pe: Cost,
    pub min_solution: Solution,
}

impl Molecule {
    pub fn new(solution: Solution, pe: Cost, ke: Energy) -> Self {
        Molecule {
            min_solution: solution.clone(),
            solution,
            pe,
            ke,
            num_hit: 0,
            min_hit: 0,
            min_pe: pe,
        }
    }

    pub fn energy(&self) -> Energy {
        Energy::from_cost(self.pe) + self.ke
    }

    fn hit(&mut self) {
        self.num_hit += 1;
    }

    fn take(&mut self, solution: Solution, pe: Cost, ke: Energy) {
        self.solution = solution;
        self.pe = pe;
        self.ke = ke;
        if pe < self.min_pe {
            self.min_pe = pe;
            self.min_solution = self.solution.clone();
            self.min_hit = self.num_hit;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReactionKind {
    OnWall,
    Decomposition,
    Inter,
    Synthesis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepOutcome {
    pub kind: ReactionKind,
    pub accepted: bool,
}

/// Attempted and accepted counts per reaction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReactionCounts {
    pub on_wall: u64,
    pub on_wall_accepted: u64,
    pub decomposition: u64,
    pub decomposition_accepted: u64,
    pub inter: u64,
    pub inter_accepted: u64,
    pub synthesis: u64,
    pub synthesis_accepted: u64,
}

impl ReactionCounts {
    fn record(&mut self, outcome: StepOutcome) {
        let (tried, ok) = match outcome.kind {
            ReactionKind::OnWall => (&mut self.on_wall, &mut self.on_wall_accepted),
            ReactionKind::Decomposition => {
                (&mut self.decomposition, &mut self.decomposition_accepted)
            }
            ReactionKind::Inter => (&mut self.inter, &mut self.inter_accepted),
            ReactionKind::Synthesis => (&mut self.synthesis, &mut self.synthesis_accepted),
        };
        *tried += 1;
        if outcome.accepted {
            *ok += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_cost: Cost,
    pub best_cover: Cover,
    pub best_solution: Solution,
    pub fe_used: u64,
    pub reaction_counts: ReactionCounts,
    pub wall_time: Duration,
}

/// On-wall energy rule. Accepts when `pe + ke >= pe_new`; the surplus is
/// split `q : 1 - q` between the new kinetic energy and the buffer.
/// Returns `(ke_new, to_buffer)`.
pub fn on_wall_energy(pe: Cost, ke: Energy, pe_new: Cost, q: Fraction) -> Option<(Energy, Energy)> {
    let surplus = Energy::from_cost(pe) + ke - Energy::from_cost(pe_new);
    if surplus < Energy::ZERO {
        return None;
    }
    let ke_new = surplus.scale(q);
    Some((ke_new, surplus - ke_new))
}

/// Decomposition energy rule. With `E = pe + ke`, succeeds outright when
/// `E >= pe1 + pe2`; otherwise draws `d1, d2` and succeeds when
/// `E + d1 * d2 * buffer` reaches the target, withdrawing exactly the
/// deficit. Returns `(leftover, withdrawn)`.
pub fn decomposition_energy(
    pe: Cost,
    ke: Energy,
    pe1: Cost,
    pe2: Cost,
    buffer: Energy,
    draw: impl FnOnce() -> (Fraction, Fraction),
) -> Option<(Energy, Energy)> {
    let available = Energy::from_cost(pe) + ke;
    let needed = Energy::from_cost(pe1 + pe2);
    if available >= needed {
        return Some((available - needed, Energy::ZERO));
    }
    let (d1, d2) = draw();
    let deficit = needed - available;
    if buffer.scale(d1.product(d2)) >= deficit {
        Some((Energy::ZERO, deficit))
    } else {
        None
    }
}

/// Inter-molecular energy rule: accepts when the pair's total energy covers
/// the new potentials. Returns the leftover to split.
pub fn inter_energy(e1: Energy, e2: Energy, pe1_new: Cost, pe2_new: Cost) -> Option<Energy> {
    let leftover = e1 + e2 - Energy::from_cost(pe1_new + pe2_new);
    (leftover >= Energy::ZERO).then_some(leftover)
}

/// Synthesis energy rule: the merged molecule keeps all surplus as `ke`.
pub fn synthesis_energy(e1: Energy, e2: Energy, pe_new: Cost) -> Option<Energy> {
    inter_energy(e1, e2, pe_new, 0)
}

pub struct Engine<'a> {
    instance: &'a Instance,
    params: Params,
    variant: Variant,
    rng: ChaCha8Rng,
    population: Vec<Molecule>,
    buffer: Energy,
    fe_count: u64,
    fe_limit: u64,
    syn_threshold: Energy,
    ke_keep_min: Fraction,
    best_cost: Cost,
    best_solution: Solution,
    counts: ReactionCounts,
}

impl<'a> Engine<'a> {
    /// Seeds `pop_size` molecules from the variant's initializer.
    pub fn new(
        instance: &'a Instance,
        params: Params,
        variant: Variant,
        seed: u64,
    ) -> Result<Self> {
        params.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let init = variant.initializer();
        let ke = Energy::from_f64(params.init_ke);
        let population: Vec<Molecule> = (0..params.pop_size)
            .map(|_| {
                let s = init.apply(instance, &mut rng);
                let pe = evaluate_cost(instance, &s);
                Molecule::new(s, pe, ke)
            })
            .collect();
        let buffer = Energy::from_f64(params.init_buffer);
        Ok(Self::assemble(
            instance, params, variant, rng, population, buffer,
        ))
    }

    /// Starts from given solutions and kinetic energies instead of the
    /// initializer.
    pub fn from_population(
        instance: &'a Instance,
        params: Params,
        variant: Variant,
        seed: u64,
        molecules: Vec<(Solution, Energy)>,
        buffer: Energy,
    ) -> Result<Self> {
        params.validate()?;
        if molecules.is_empty() {
            return Err(Error::InvalidParam("empty population".into()));
        }
        if buffer < Energy::ZERO || molecules.iter().any(|(_, ke)| *ke < Energy::ZERO) {
            return Err(Error::InvalidParam("energies must be nonnegative".into()));
        }
        let population = molecules
            .into_iter()
            .map(|(s, ke)| {
                let pe = evaluate_cost(instance, &s);
                Molecule::new(s, pe, ke)
            })
            .collect();
        let rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(Self::assemble(
            instance, params, variant, rng, population, buffer,
        ))
    }

    fn assemble(
        instance: &'a Instance,
        params: Params,
        variant: Variant,
        rng: ChaCha8Rng,
        population: Vec<Molecule>,
        buffer: Energy,
    ) -> Self {
        let fe_count = if params.count_initial_evaluations {
            population.len() as u64
        } else {
            0
        };
        let best = population
            .iter()
            .min_by_key(|m| m.pe)
            .expect("population is non-empty");
        Engine {
            instance,
            fe_limit: params.fe_limit_for(instance),
            syn_threshold: Energy::from_f64(params.syn_threshold),
            ke_keep_min: Fraction::from_f64(params.ke_loss_rate),
            best_cost: best.pe,
            best_solution: best.solution.clone(),
            params,
            variant,
            rng,
            population,
            buffer,
            fe_count,
            counts: ReactionCounts::default(),
        }
    }

    pub fn population(&self) -> &[Molecule] {
        &self.population
    }

    pub fn buffer(&self) -> Energy {
        self.buffer
    }

    pub fn fe_count(&self) -> u64 {
        self.fe_count
    }

    pub fn fe_limit(&self) -> u64 {
        self.fe_limit
    }

    pub fn best_cost(&self) -> Cost {
        self.best_cost
    }

    pub fn best_solution(&self) -> &Solution {
        &self.best_solution
    }

    pub fn reaction_counts(&self) -> ReactionCounts {
        self.counts
    }

    pub fn is_done(&self) -> bool {
        self.fe_count >= self.fe_limit
    }

    /// `sum(pe + ke) + buffer`, in raw fixed-point units.
    pub fn total_energy(&self) -> i128 {
        self.population
            .iter()
            .map(|m| i128::from(m.energy().raw()))
            .sum::<i128>()
            + i128::from(self.buffer.raw())
    }

    fn evaluate(&mut self, solution: &Solution) -> Cost {
        self.fe_count += 1;
        let cost = evaluate_cost(self.instance, solution);
        if cost < self.best_cost {
            self.best_cost = cost;
            self.best_solution = solution.clone();
        }
        cost
    }

    /// One elementary reaction chosen by the collision rate, the population
    /// size and the decomposition and synthesis triggers.
    pub fn step(&mut self) -> Result<StepOutcome> {
        if self.is_done() {
            return Err(Error::BudgetExhausted(self.fe_count));
        }
        let u: f64 = self.rng.gen();
        let len = self.population.len();
        let outcome = if u <= self.params.collision_rate || len == 1 {
            let idx = self.rng.gen_range(0..len);
            let m = &self.population[idx];
            if m.num_hit - m.min_hit > self.params.dec_threshold {
                StepOutcome {
                    kind: ReactionKind::Decomposition,
                    accepted: self.decomposition(idx),
                }
            } else {
                StepOutcome {
                    kind: ReactionKind::OnWall,
                    accepted: self.on_wall(idx),
                }
            }
        } else {
            let a = self.rng.gen_range(0..len);
            let mut b = self.rng.gen_range(0..len - 1);
            if b >= a {
                b += 1;
            }
            let (ka, kb) = (self.population[a].ke, self.population[b].ke);
            if ka <= self.syn_threshold && kb <= self.syn_threshold {
                StepOutcome {
                    kind: ReactionKind::Synthesis,
                    accepted: self.synthesis(a, b),
                }
            } else {
                StepOutcome {
                    kind: ReactionKind::Inter,
                    accepted: self.inter(a, b),
                }
            }
        };
        self.counts.record(outcome);
        Ok(outcome)
    }

    pub fn on_wall(&mut self, idx: usize) -> bool {
        let op = self.variant.neighborhood();
        let candidate = op.apply(self.instance, &self.population[idx].solution, &mut self.rng);
        let pe_new = self.evaluate(&candidate);
        let m = &self.population[idx];
        let (pe, ke) = (m.pe, m.ke);
        let keep_min = self.ke_keep_min;
        let rng = &mut self.rng;
        let accepted = if Energy::from_cost(pe) + ke >= Energy::from_cost(pe_new) {
            let q = Fraction::sample_at_least(keep_min, rng);
            on_wall_energy(pe, ke, pe_new, q)
        } else {
            None
        };
        let m = &mut self.population[idx];
        m.hit();
        match accepted {
            Some((ke_new, to_buffer)) => {
                m.take(candidate, pe_new, ke_new);
                self.buffer += to_buffer;
                true
            }
            None => false,
        }
    }

    pub fn decomposition(&mut self, idx: usize) -> bool {
        let op = self.variant.neighborhood();
        let parent = self.population[idx].solution.clone();
        let (s1, s2) = decompose_with(self.instance, &parent, op, &mut self.rng);
        let pe1 = self.evaluate(&s1);
        let pe2 = self.evaluate(&s2);
        let m = &self.population[idx];
        let rng = &mut self.rng;
        let outcome = decomposition_energy(m.pe, m.ke, pe1, pe2, self.buffer, || {
            (Fraction::sample_unit(rng), Fraction::sample_unit(rng))
        });
        match outcome {
            Some((leftover, withdrawn)) => {
                self.buffer -= withdrawn;
                let split = Fraction::sample_unit(&mut self.rng);
                let ke1 = leftover.scale(split);
                self.population.remove(idx);
                self.population.push(Molecule::new(s1, pe1, ke1));
                self.population.push(Molecule::new(s2, pe2, leftover - ke1));
                true
            }
            None => {
                self.population[idx].hit();
                false
            }
        }
    }

    pub fn inter(&mut self, a: usize, b: usize) -> bool {
        assert_ne!(a, b, "inter needs two distinct molecules");
        let op = self.variant.neighborhood();
        let s1 = op.apply(self.instance, &self.population[a].solution, &mut self.rng);
        let s2 = op.apply(self.instance, &self.population[b].solution, &mut self.rng);
        let pe1 = self.evaluate(&s1);
        let pe2 = self.evaluate(&s2);
        let outcome = inter_energy(
            self.population[a].energy(),
            self.population[b].energy(),
            pe1,
            pe2,
        );
        self.population[a].hit();
        self.population[b].hit();
        match outcome {
            Some(leftover) => {
                let split = Fraction::sample_unit(&mut self.rng);
                let ke1 = leftover.scale(split);
                self.population[a].take(s1, pe1, ke1);
                self.population[b].take(s2, pe2, leftover - ke1);
                true
            }
            None => false,
        }
    }

    pub fn synthesis(&mut self, a: usize, b: usize) -> bool {
        assert_ne!(a, b, "synthesis needs two distinct molecules");
        let (ma, mb) = (&self.population[a], &self.population[b]);
        let child = synthesize_with_costs(&ma.solution, ma.pe, &mb.solution, mb.pe, &mut self.rng);
        let pe_new = self.evaluate(&child);
        let outcome = synthesis_energy(
            self.population[a].energy(),
            self.population[b].energy(),
            pe_new,
        );
        match outcome {
            Some(ke_new) => {
                let (hi, lo) = if a > b { (a, b) } else { (b, a) };
                self.population.remove(hi);
                self.population.remove(lo);
                self.population.push(Molecule::new(child, pe_new, ke_new));
                true
            }
            None => {
                self.population[a].hit();
                self.population[b].hit();
                false
            }
        }
    }

    /// Steps until the budget is exhausted, calling `observe` after each
    /// reaction.
    pub fn run_observed(&mut self, mut observe: impl FnMut(&Engine<'a>, StepOutcome)) {
        while !self.is_done() {
            let outcome = self.step().expect("budget checked");
            observe(self, outcome);
        }
    }

    pub fn into_result(self, wall_time: Duration) -> RunResult {
        RunResult {
            best_cost: self.best_cost,
            best_cover: self.best_solution.to_cover(),
            best_solution: self.best_solution,
            fe_used: self.fe_count,
            reaction_counts: self.counts,
            wall_time,
        }
    }
}

/// Full run: initialize, then react until `fe_count >= fe_limit`.
pub fn run(instance: &Instance, params: &Params, seed: u64, variant: Variant) -> Result<RunResult> {
    let start = Instant::now();
    let mut engine = Engine::new(instance, params.clone(), variant, seed)?;
    engine.run_observed(|_, _| {});
    Ok(engine.into_result(start.elapsed()))
}
