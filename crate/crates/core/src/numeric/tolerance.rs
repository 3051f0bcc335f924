use crate::error::{Error, Result};

/// The shared numerical tolerance policy.
///
/// Every field must lie in `(0, 1e-3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Idempotence / self-adjointness residual allowed for projectors.
    pub proj: f64,
    /// `‖A − A†‖_F` allowed for Hermitian operators.
    pub herm: f64,
    /// Deviation of a state norm from one.
    pub norm: f64,
    /// Eigenvalue threshold separating numerical zero from nonzero.
    pub rank: f64,
    /// Equality threshold for expectations, truth degrees and subspaces.
    pub eq: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            proj: 1e-9,
            herm: 1e-9,
            norm: 1e-10,
            rank: 1e-8,
            eq: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(proj: f64, herm: f64, norm: f64, rank: f64, eq: f64) -> Result<Self> {
        let tol = Tolerance {
            proj,
            herm,
            norm,
            rank,
            eq,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("proj", self.proj),
            ("herm", self.herm),
            ("norm", self.norm),
            ("rank", self.rank),
            ("eq", self.eq),
        ];
        for (name, value) in fields {
            if !(value > 0.0 && value < 1e-3) {
                return Err(Error::InvalidTolerance(format!(
                    "{name} = {value} must lie in (0, 1e-3)"
                )));
            }
        }
        Ok(())
    }

    /// Upper edge of the band in which a PSD eigenvalue is considered ambiguous.
    ///
    /// Eigenvalues below `rank` are zero, eigenvalues at or above `sqrt(rank)` are
    /// nonzero, anything in between raises [`Error::RankAmbiguous`].
    pub fn ambiguity_ceiling(&self) -> f64 {
        self.rank.sqrt()
    }
}
