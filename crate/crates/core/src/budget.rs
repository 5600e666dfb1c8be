//! Resource budgets for the search-shaped operations.

/// Caps for enumeration and search. The defaults cover everything the
/// verification suite needs (`n <= 3`); raising them is best-effort.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Largest Brandt index `n` accepted by the enumeration routines.
    pub max_n: usize,
    /// Cap on the number of elements a closure computation may produce.
    pub max_closure_elements: usize,
    /// Node cap for backtracking searches (isomorphism, disjunctive subset).
    pub max_search_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 3,
            max_closure_elements: 200_000,
            max_search_nodes: 10_000_000,
        }
    }
}

impl Budget {
    /// Default budget with a different search-node cap.
    pub fn with_nodes(max_search_nodes: u64) -> Self {
        Budget {
            max_search_nodes,
            ..Budget::default()
        }
    }
}
