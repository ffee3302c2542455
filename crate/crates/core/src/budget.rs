//! Resource limits for enumeration and graph exploration.

/// Environment variable overriding both limits.
pub const BUDGET_ENV: &str = "SUPERCRYSTAL_BUDGET";

pub const DEFAULT_ENUMERATION: usize = 1_000_000;
pub const DEFAULT_BFS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Search nodes visited while enumerating fillings.
    pub enumeration: usize,
    /// Vertices discovered during component exploration.
    pub bfs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: DEFAULT_ENUMERATION,
            bfs: DEFAULT_BFS,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            enumeration: usize::MAX,
            bfs: usize::MAX,
        }
    }

    /// Defaults, unless `SUPERCRYSTAL_BUDGET` holds a positive integer, which
    /// then replaces both limits.
    pub fn from_env() -> Budget {
        match std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(limit) if limit > 0 => Budget {
                enumeration: limit,
                bfs: limit,
            },
            _ => Budget::default(),
        }
    }
}
