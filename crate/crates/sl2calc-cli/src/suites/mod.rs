//! Registered checks, grouped by suite.

mod grassmannian;
mod nilhecke;
mod partitions;
mod random;
mod symfun;
mod udot;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::check::Check;
use crate::config::{Suite, SuiteConfig};
use crate::report::{run_checks, SuiteReport};
use crate::CliError;

/// Every check registered for `cfg.suite`, in registration order.
pub fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    match cfg.suite {
        Suite::Partitions => partitions::checks(cfg),
        Suite::Symfun => symfun::checks(cfg),
        Suite::Nilhecke => nilhecke::checks(cfg),
        Suite::Grassmannian => grassmannian::checks(cfg),
        Suite::Udot => udot::checks(cfg),
        Suite::All => Suite::INDIVIDUAL.iter().flat_map(|&s| checks(&cfg.for_suite(s))).collect(),
    }
}

/// Validates the configuration, runs every check of the suite on a worker
/// pool with `cfg.jobs` threads (0 = one per core) and assembles the report.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, CliError> {
    cfg.validate()?;
    let list = checks(cfg);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    let results = pool.install(|| run_checks(&list, cfg.timings));
    Ok(SuiteReport::new(cfg.suite.name(), cfg.seed, results))
}

/// A generator for one randomized check. Each check draws from its own
/// stream of the seeded generator, so results do not depend on scheduling.
pub(crate) fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Renders a list of partitions for check parameters.
pub(crate) fn show<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
