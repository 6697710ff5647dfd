//! Shared inputs for the benchmark suite.

use colcomp::ColoredComposition;

/// The interval top used throughout: the four-urn example with seven
/// balls.
pub fn bench_top() -> ColoredComposition {
    ColoredComposition::parse("2c0,2c0,1c1,2c0", 2).expect("valid input")
}

/// Its bottom companion.
pub fn bench_bottom() -> ColoredComposition {
    ColoredComposition::parse("3c0", 2).expect("valid input")
}
