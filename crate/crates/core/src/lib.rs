//! Chemical reaction optimization for the set covering problem.
//!
//! The crate holds the instance model and file formats, the solution
//! operators, the reaction engine with its ablation variants, a genetic
//! algorithm built from the same operators, the greedy baseline, and a
//! benchmark harness with an exact oracle for small instances.
//!
//! ```
//! use scp_cro::{engine, orlib};
//!
//! let inst = orlib::generate_random(20, 30, 0.2, 1, 100, 7).unwrap();
//! let params = engine::Params { fe_limit: Some(2000), ..Default::default() };
//! let result = engine::run(&inst, &params, 1, engine::Variant::Hcro).unwrap();
//! assert_eq!(result.best_cost, result.best_cover.cost(&inst));
//! ```

pub mod bench;
pub mod cli;
pub mod energy;
pub mod engine;
pub mod error;
pub mod ga;
pub mod instance;
pub mod operators;
pub mod orlib;

pub use energy::{Energy, Fraction};
pub use engine::{run, Engine, Params, RunResult, Variant};
pub use error::{Error, Result};
pub use ga::{run_hga, GaParams};
pub use instance::{Cost, Cover, Incidence, Instance, Solution};
