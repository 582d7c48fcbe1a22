/// Size limits for the exhaustive oracles and the doubling construction.
///
/// The defaults are sized so that every check in the test suites finishes
/// in seconds on a laptop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Largest order accepted by the outerplanarity oracle.
    pub outerplanar_max_n: usize,
    /// Largest order accepted by the exact outerthickness search.
    pub search_max_n: usize,
    /// Largest edge count accepted by the exact outerthickness search.
    pub search_max_m: usize,
    /// Node cap for a single exhaustive search.
    pub search_max_nodes: u64,
    /// Largest order accepted by the exact chromatic number solver.
    pub color_max_n: usize,
    /// Highest level of the doubling construction.
    pub doubling_max_s: u32,
}

impl Budgets {
    pub const DEFAULT: Budgets = Budgets {
        outerplanar_max_n: 32,
        search_max_n: 10,
        search_max_m: 24,
        search_max_nodes: 500_000_000,
        color_max_n: 12,
        doubling_max_s: 7,
    };
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets::DEFAULT
    }
}
