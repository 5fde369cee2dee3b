use num_rational::Ratio;
use serde::Serialize;

use crate::constructions::is_exceptional;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::planarity::{apex_certificate, phi, psi};

/// Which case of the strengthened apex bound applies to `(G, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ApexCase {
    /// Exceptional: `E = 3V - 9 + phi + 1/3`.
    Exceptional,
    /// `a` sees every other vertex: `E <= 3V - 9 + phi + psi(V)/3`.
    Dominating,
    /// One non-neighbour: `E <= 3V - 9 + phi + (7 - V)^+/3`.
    OneNonNeighbour,
    /// Two or more non-neighbours: `E <= 3V - 9 + phi`.
    TwoNonNeighbours,
}

/// The evaluated case: `bound` is the right-hand side, with equality required
/// in the exceptional case and `E <= bound` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexCheck {
    pub case: ApexCase,
    pub phi: Ratio<i64>,
    pub bound: Ratio<i64>,
    pub holds: bool,
}

/// Evaluates the strengthened apex bound for `(g, a)` using the embedding of
/// `g - a` produced by the planarity module.
pub fn strengthened_apex_check(g: &Graph, a: usize) -> Result<ApexCheck> {
    let v = g.vertex_count();
    if v < 2 {
        return Err(Error::Precondition(format!("need at least 2 vertices, got {v}")));
    }
    let cert = apex_certificate(g, a)?.ok_or(Error::NotPlanar)?;
    let phi = phi(g, a, &cert.embedding)?;
    let base = Ratio::from_integer(3 * v as i64 - 9) + phi;
    let non_neighbours = (g.vertex_set() & !bit(a) & !g.neighbors(a)).count_ones();
    let (case, extra) = if is_exceptional(g, a) {
        (ApexCase::Exceptional, Ratio::new(1, 3))
    } else {
        match non_neighbours {
            0 => (ApexCase::Dominating, Ratio::new(psi(v), 3)),
            1 => (ApexCase::OneNonNeighbour, Ratio::new((7 - v as i64).max(0), 3)),
            _ => (ApexCase::TwoNonNeighbours, Ratio::from_integer(0)),
        }
    };
    let bound = base + extra;
    let e = Ratio::from_integer(g.edge_count() as i64);
    let holds = if case == ApexCase::Exceptional { e == bound } else { e <= bound };
    Ok(ApexCheck { case, phi, bound, holds })
}

/// Whether the applicable case of the strengthened apex bound holds for `(g, a)`.
pub fn check_strengthened_apex(g: &Graph, a: usize) -> Result<bool> {
    Ok(strengthened_apex_check(g, a)?.holds)
}
