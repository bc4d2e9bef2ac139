use std::sync::Arc;

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::semigroup::ExponentPair;

/// Shared handle to a ring descriptor.
pub type Ring = Arc<GradedRing>;

/// Polynomial ring `Q[v_0, ..., v_n]` with a positive internal degree per
/// variable and the monomial order its polynomials are kept sorted by.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedRing {
    names: Vec<String>,
    degrees: Vec<u64>,
    order: MonomialOrder,
}

impl GradedRing {
    pub fn new(names: Vec<String>, degrees: Vec<u64>, order: MonomialOrder) -> Result<Ring> {
        if names.len() != degrees.len() {
            return Err(Error::Parameter("one degree per variable is required".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::Parameter("variable degrees must be positive".into()));
        }
        if let Some(n) = order.nvars() {
            if n != names.len() {
                return Err(Error::RingMismatch(format!("order on {n} variables for a ring with {}", names.len())));
            }
        }
        Ok(Arc::new(GradedRing { names, degrees, order }))
    }

    /// `Q[y_0..y_n]` with `deg y_i = degrees[i]` under weighted grevlex.
    pub fn presentation(degrees: &[u64]) -> Result<Ring> {
        let names = (0..degrees.len()).map(|i| format!("y{i}")).collect();
        GradedRing::new(names, degrees.to_vec(), MonomialOrder::weighted_grevlex(degrees.to_vec()))
    }

    /// `Q[x1, x2, y_0..y_n]` with the `x` block eliminated first.
    pub fn elimination(points: &[ExponentPair]) -> Result<Ring> {
        let ydeg: Vec<u64> = points.iter().map(ExponentPair::degree).collect();
        let mut names = vec!["x1".to_string(), "x2".to_string()];
        names.extend((0..points.len()).map(|i| format!("y{i}")));
        let mut degrees = vec![1, 1];
        degrees.extend(&ydeg);
        let order = MonomialOrder::Block { split: 2, first: vec![1, 1], second: ydeg };
        GradedRing::new(names, degrees, order)
    }

    /// Same variables and grading, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        GradedRing::new(self.names.clone(), self.degrees.clone(), order)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn degree_of(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.degrees)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and grading, regardless of the order.
    pub fn same_space(&self, other: &GradedRing) -> bool {
        self.names == other.names && self.degrees == other.degrees
    }

    pub fn check_same_space(&self, other: &GradedRing) -> Result<()> {
        if self.same_space(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.names, other.names)))
        }
    }
}
