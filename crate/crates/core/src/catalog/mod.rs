//! Fixtures, file formats, seeded generators and batch suites.

mod fixtures;
mod format;
mod generate;
mod suite;

use thiserror::Error;

use crate::normality::NormalityError;
use crate::polytope::PolytopeError;
use crate::toric::ToricError;

pub use fixtures::{
    builtin, builtin_fan, reeve, Fixture, FAN_NAMES, FIXTURE_NAMES, REFLEXIVE_FIXTURES,
};
pub use format::{
    parse_fan, parse_polytope, parse_vertex_blocks, write_fan, write_polytope, ParseError,
    ParseErrorKind,
};
pub use generate::{
    gen_random_polytope, gen_reflexive_polygons, polygon_normal_form, random_divisor,
    random_polygon, random_polytope, random_segment, random_smooth_fan, SeededRng, MAX_RETRIES,
};
pub use suite::{
    run_item, run_suite, run_suite_streaming, thread_limit, ItemError, SuiteResult, SuiteSummary,
    SUITE_NAMES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("no full-dimensional sample after {retries} draws")]
    GenerationFailed { retries: usize },
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Normality(#[from] NormalityError),
}
