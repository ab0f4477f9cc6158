//! Monomial term orders, each with an explicit variable ranking.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::ExponentVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GradedLex,
    GradedRevLex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Lex, OrderKind::GradedLex, OrderKind::GradedRevLex];
}

/// A term order: `kind` together with a ranking of the variables.
/// `ranking[0]` is the most significant variable, so the identity ranking
/// gives `x1 > x2 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, ranking: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= ranking.len() || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "variable ranking {ranking:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(TermOrder { kind, ranking })
    }

    pub fn with_identity(kind: OrderKind, arity: usize) -> Self {
        TermOrder {
            kind,
            ranking: (0..arity).collect(),
        }
    }

    pub fn lex(arity: usize) -> Self {
        Self::with_identity(OrderKind::Lex, arity)
    }

    pub fn grlex(arity: usize) -> Self {
        Self::with_identity(OrderKind::GradedLex, arity)
    }

    pub fn grevlex(arity: usize) -> Self {
        Self::with_identity(OrderKind::GradedRevLex, arity)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn arity(&self) -> usize {
        self.ranking.len()
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.len(), self.arity());
        debug_assert_eq!(b.len(), self.arity());
        let lex = || {
            self.ranking
                .iter()
                .map(|&v| a[v].cmp(&b[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::GradedLex => a.total().cmp(&b.total()).then_with(lex),
            OrderKind::GradedRevLex => a.total().cmp(&b.total()).then_with(|| {
                self.ranking
                    .iter()
                    .rev()
                    .map(|&v| b[v].cmp(&a[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }

    /// Every order kind combined with every variable ranking of `arity`
    /// variables. Grows as `3 * arity!`; intended for small arities.
    pub fn all_orders(arity: usize) -> Vec<TermOrder> {
        let perms = permutations(arity);
        OrderKind::ALL
            .iter()
            .flat_map(|&kind| {
                perms.iter().map(move |r| TermOrder {
                    kind,
                    ranking: r.clone(),
                })
            })
            .collect()
    }
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
