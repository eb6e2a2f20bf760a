//! Simulation core for a resource-rational model of reading.
//!
//! A simulated reader is a sequential decision-making agent with foveated,
//! noisy letter perception, exact Bayesian beliefs over word identity,
//! capacity-limited short-term memory with decaying gist consolidation, and
//! a discrete oculomotor action set. Policies that decide where and when to
//! move the eyes are trained with proximal policy optimization against a
//! reward that trades comprehension utility against oculomotor and time
//! costs; emitted scanpaths are scored with standard reading metrics.
//!
//! Module map:
//!
//! - [`corpus`] — tokenization, frequency/predictability annotation, and
//!   same-length candidate sets for word recognition
//! - [`perception`] — eccentricity-dependent letter identification and
//!   noisy observation sampling
//! - [`belief`] — per-word posteriors plus sentence and text summaries
//! - [`memory`] — short-term store with eviction and long-term gist decay
//! - [`env`] — the reading POMDP: actions, timing, rewards, scanpaths
//! - [`agent`] — hierarchical control and heuristic baseline policies
//! - [`ppo`] — from-scratch policy/value networks, GAE, and the PPO trainer
//! - [`metrics`] — Levenshtein/NLD scanpath similarity and reading metrics
//!
//! The crate is `no_std`-compatible (`alloc` required); file formats, the
//! CLI, and anything that touches the filesystem live in the companion
//! `readsim-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod agent;
pub mod belief;
pub mod corpus;
pub mod env;
pub mod error;
mod math;
pub mod memory;
pub mod metrics;
pub mod perception;
pub mod ppo;
pub mod rng;

pub use error::{CoreError, Result};
