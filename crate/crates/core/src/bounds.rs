use crate::{Error, Result};

/// Resource guards for the enumeration and construction routines.
///
/// Suites up to `max_n = 7` finish in well under a minute; 8 and 9 are
/// opt-in. Orders above `HARD_MAX_N` are refused outright.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Largest hyperoctahedral order that may be enumerated.
    pub max_n: usize,
    /// Largest base-complex dimension for explicit subdivision construction.
    pub max_dim: usize,
}

pub const HARD_MAX_N: usize = 9;

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_n: 8, max_dim: 4 }
    }
}

impl Bounds {
    pub fn with_max_n(max_n: usize) -> Self {
        Bounds { max_n, ..Bounds::default() }
    }

    pub fn check_order(&self, n: usize) -> Result<()> {
        let limit = self.max_n.min(HARD_MAX_N);
        if n > limit {
            return Err(Error::ResourceLimit {
                what: "enumeration order n",
                requested: n,
                limit,
            });
        }
        Ok(())
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            return Err(Error::ResourceLimit {
                what: "base complex dimension",
                requested: dim,
                limit: self.max_dim,
            });
        }
        Ok(())
    }
}
