//! Closed-form vertex labelings and the edge labels each theorem claims for
//! them. Claimed labels are reproduced as printed; nothing here checks them.

use crate::error::{Error, Result};
use crate::generators::{Family, FamilyInstance, RoleKind};
use crate::graph::Edge;

use super::{Mode, VertexLabeling};

use RoleKind::{Apex, A, B, U, V};

/// A theorem's closed-form label for one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    /// Edge name in the theorem's notation, e.g. `e_3` or `u_2v_2`.
    pub name: String,
    pub edge: Edge,
    pub label: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremLabeling {
    pub instance: FamilyInstance,
    /// `None` when the family and parity have no literal/corrected split.
    pub mode: Option<Mode>,
    pub labels: VertexLabeling,
    pub claims: Vec<Claim>,
}

impl TheoremLabeling {
    pub fn claim_for(&self, edge: Edge) -> Option<&Claim> {
        self.claims.iter().find(|c| c.edge == edge)
    }

    /// Edges the theorem gives no label for, in canonical order.
    pub fn uncovered(&self) -> Vec<Edge> {
        self.instance
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|&e| self.claim_for(e).is_none())
            .collect()
    }
}

/// Whether `family` at size `n` has distinct literal and corrected variants.
pub fn has_modes(family: Family, n: usize) -> bool {
    matches!(family, Family::Comb | Family::Ladder) && n.is_multiple_of(2)
}

/// Vertex labels and claimed edge labels for `family` at size `n`.
/// `mode` only matters for even combs and ladders.
pub fn label_theorem(family: Family, n: usize, mode: Mode) -> Result<TheoremLabeling> {
    let instance = family.generate(n)?;
    let mode = has_modes(family, n).then_some(mode);
    let mut b = Builder::new(instance);
    match family {
        Family::Path => path(&mut b)?,
        Family::Cycle => cycle(&mut b)?,
        Family::Star => star(&mut b)?,
        Family::Comb => comb(&mut b, mode.unwrap_or_default())?,
        Family::Ladder => ladder(&mut b, mode.unwrap_or_default())?,
        Family::PathStar => path_star(&mut b)?,
    }
    b.finish(mode)
}

pub fn label_path(n: usize) -> Result<TheoremLabeling> {
    label_theorem(Family::Path, n, Mode::default())
}

pub fn label_cycle(n: usize) -> Result<TheoremLabeling> {
    label_theorem(Family::Cycle, n, Mode::default())
}

pub fn label_star(t: usize) -> Result<TheoremLabeling> {
    label_theorem(Family::Star, t, Mode::default())
}

pub fn label_comb(n: usize, mode: Mode) -> Result<TheoremLabeling> {
    label_theorem(Family::Comb, n, mode)
}

pub fn label_ladder(n: usize, mode: Mode) -> Result<TheoremLabeling> {
    label_theorem(Family::Ladder, n, mode)
}

pub fn label_path_star(n: usize) -> Result<TheoremLabeling> {
    label_theorem(Family::PathStar, n, Mode::default())
}

/// Checked arithmetic over label values.
#[derive(Clone, Copy)]
struct Val(u64);

impl Val {
    fn of(x: usize) -> Self {
        Val(x as u64)
    }

    fn add(self, x: impl Into<u64>) -> Result<Self> {
        self.0.checked_add(x.into()).map(Val).ok_or(Error::Overflow("label"))
    }

    fn plus(self, other: Val) -> Result<Self> {
        self.add(other.0)
    }

    fn sub(self, x: u64) -> Result<Self> {
        self.0.checked_sub(x).map(Val).ok_or(Error::Overflow("label"))
    }

    fn mul(self, x: u64) -> Result<Self> {
        self.0.checked_mul(x).map(Val).ok_or(Error::Overflow("label"))
    }

    /// Halves a formula's numerator, which must be even.
    fn half(self) -> Result<Self> {
        if !self.0.is_multiple_of(2) {
            return Err(Error::Format(format!("closed form yields non-integer {}/2", self.0)));
        }
        Ok(Val(self.0 / 2))
    }
}

struct Builder {
    instance: FamilyInstance,
    labels: Vec<Option<u64>>,
    claims: Vec<Claim>,
}

impl Builder {
    fn new(instance: FamilyInstance) -> Self {
        let n = instance.graph.vertex_count();
        Builder {
            instance,
            labels: vec![None; n],
            claims: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.instance.n
    }

    fn set(&mut self, kind: RoleKind, i: usize, label: Val) {
        let v = self.instance.vertex(kind, i);
        self.labels[v] = Some(label.0);
    }

    fn label(&self, kind: RoleKind, i: usize) -> Val {
        Val(self.labels[self.instance.vertex(kind, i)].expect("label set before use"))
    }

    fn claim(&mut self, name: String, a: (RoleKind, usize), b: (RoleKind, usize), label: Val) {
        let edge = self.instance.edge(a, b);
        self.claims.push(Claim {
            name,
            edge,
            label: label.0,
        });
    }

    fn finish(self, mode: Option<Mode>) -> Result<TheoremLabeling> {
        let g = &self.instance.graph;
        let labels: Vec<u64> = self.labels.iter().map(|l| l.expect("every vertex labeled")).collect();
        let labels = VertexLabeling::for_graph(g, &labels)?;
        Ok(TheoremLabeling {
            instance: self.instance,
            mode,
            labels,
            claims: self.claims,
        })
    }
}

fn even_index_labels(b: &mut Builder, kind: RoleKind) -> Result<()> {
    for i in 1..=b.n() {
        b.set(kind, i, Val::of(i).mul(2)?);
    }
    Ok(())
}

/// `f(v_i) = 2i`; `f(e_i) = (n + 5 + j) / 2` for even `n`,
/// `(n + 4 + j) / 2` for odd `n`, with `j = 4i - 3`.
fn path(b: &mut Builder) -> Result<()> {
    let n = b.n();
    even_index_labels(b, V)?;
    let offset = if n.is_multiple_of(2) { 5 } else { 4 };
    for i in 1..n {
        let j = Val::of(i).mul(4)?.sub(3)?;
        let label = Val::of(n).add(offset as u64)?.plus(j)?.half()?;
        b.claim(format!("e_{i}"), (V, i), (V, i + 1), label);
    }
    Ok(())
}

/// Odd `n`: `f(v_i) = 2i`, `f(e_i) = (n + 6 + j) / 2` with `j = 4i - 3`
/// (`i < n`) and `j = 2i - 3` (`i = n`).
/// Even `n`: `f(v_n) = 2n + 2`, `f(e_i) = (n + 5 + j) / 2` with `j = 4i - 3`
/// (`i <= n - 2`) and `j = 4i - 5` (`i = n - 1, n`).
fn cycle(b: &mut Builder) -> Result<()> {
    let n = b.n();
    even_index_labels(b, V)?;
    let odd = n % 2 == 1;
    if !odd {
        b.set(V, n, Val::of(n).mul(2)?.add(2u64)?);
    }
    for i in 1..=n {
        let four_i = Val::of(i).mul(4)?;
        let (offset, j) = if odd {
            let j = if i < n {
                four_i.sub(3)?
            } else {
                Val::of(i).mul(2)?.sub(3)?
            };
            (6u64, j)
        } else {
            let j = if i + 2 <= n { four_i.sub(3)? } else { four_i.sub(5)? };
            (5u64, j)
        };
        let label = Val::of(n).add(offset)?.plus(j)?.half()?;
        let next = if i == n { 1 } else { i + 1 };
        b.claim(format!("e_{i}"), (V, i), (V, next), label);
    }
    Ok(())
}

/// `f(u_0) = 0`, `f(u_i) = 2i`, claimed `f(u_0 u_i) = 2i`.
fn star(b: &mut Builder) -> Result<()> {
    let t = b.n();
    b.set(Apex, 0, Val(0));
    even_index_labels(b, U)?;
    for i in 1..=t {
        let label = Val::of(i).mul(2)?;
        b.claim(format!("u_0u_{i}"), (Apex, 0), (U, i), label);
    }
    Ok(())
}

/// Pendant/rail labels shared by the comb and ladder: `f(u_i) = 2i`,
/// `f(v_i) = 2i + 2n + 2` (odd `n`), `2i + 2n - 1` (even, literal) or
/// `2i + 2n` (even, corrected).
fn two_row_labels(b: &mut Builder, mode: Mode) -> Result<()> {
    let n = b.n();
    even_index_labels(b, U)?;
    let two_n = Val::of(n).mul(2)?;
    for i in 1..=n {
        let base = Val::of(i).mul(2)?.plus(two_n)?;
        let label = match (n % 2 == 1, mode) {
            (true, _) => base.add(2u64)?,
            (false, Mode::Literal) => base.sub(1)?,
            (false, Mode::Corrected) => base,
        };
        b.set(V, i, label);
    }
    Ok(())
}

/// Spine `f(u_i u_{i+1}) = n + 2i + 1`; pendants `f(u_i v_i) = 2n + 2i + 1`
/// (odd `n`) or `2n + 2i` (even `n`).
fn comb(b: &mut Builder, mode: Mode) -> Result<()> {
    let n = b.n();
    two_row_labels(b, mode)?;
    for i in 1..n {
        let label = Val::of(n).plus(Val::of(i).mul(2)?)?.add(1u64)?;
        b.claim(format!("u_{i}u_{}", i + 1), (U, i), (U, i + 1), label);
    }
    for i in 1..=n {
        let base = Val::of(n).mul(2)?.plus(Val::of(i).mul(2)?)?;
        let label = if n % 2 == 1 { base.add(1u64)? } else { base };
        b.claim(format!("u_{i}v_{i}"), (U, i), (V, i), label);
    }
    Ok(())
}

/// u-rails `f(u_i u_{i+1}) = n + 2i + (n + 1)/2` (odd `n`) or `n + 2i + 1`
/// (even `n`); rungs `f(u_i v_i) = 2n + 2i`. The v-rails have no formula.
fn ladder(b: &mut Builder, mode: Mode) -> Result<()> {
    let n = b.n();
    two_row_labels(b, mode)?;
    for i in 1..n {
        let base = Val::of(n).plus(Val::of(i).mul(2)?)?;
        let label = if n % 2 == 1 {
            base.plus(Val::of(n).add(1u64)?.half()?)?
        } else {
            base.add(1u64)?
        };
        b.claim(format!("u_{i}u_{}", i + 1), (U, i), (U, i + 1), label);
    }
    for i in 1..=n {
        let label = Val::of(n).mul(2)?.plus(Val::of(i).mul(2)?)?;
        b.claim(format!("u_{i}v_{i}"), (U, i), (V, i), label);
    }
    Ok(())
}

/// `f(u_i) = 4i - 2`, `f(v_i) = 4i`; with `w = f(v_n) = 4n`, odd `n` gives
/// `f(a_i) = w - 2 + 4i`, `f(b_i) = w + 4i` and even `n` gives
/// `f(a_i) = w + 2 + 4i`, `f(b_i) = w + 4 + 4i`.
/// Claims: `f(u_i u_{i+1}) = 2n + 4i`, `f(u_i v_i) = 2n + 4i - 1`, and
/// `f(v_i a_i) = f(a_i) + 1`, `f(v_i b_i) = f(b_i)` (odd) or
/// `f(a_i) - 1`, `f(b_i) - 2` (even).
fn path_star(b: &mut Builder) -> Result<()> {
    let n = b.n();
    let odd = n % 2 == 1;
    for i in 1..=n {
        let four_i = Val::of(i).mul(4)?;
        b.set(U, i, four_i.sub(2)?);
        b.set(V, i, four_i);
    }
    let w = b.label(V, n);
    for i in 1..=n {
        let four_i = Val::of(i).mul(4)?;
        let (a, bl) = if odd {
            (w.sub(2)?.plus(four_i)?, w.plus(four_i)?)
        } else {
            (w.add(2u64)?.plus(four_i)?, w.add(4u64)?.plus(four_i)?)
        };
        b.set(A, i, a);
        b.set(B, i, bl);
    }
    let two_n = Val::of(n).mul(2)?;
    for i in 1..n {
        let label = two_n.plus(Val::of(i).mul(4)?)?;
        b.claim(format!("u_{i}u_{}", i + 1), (U, i), (U, i + 1), label);
    }
    for i in 1..=n {
        let label = two_n.plus(Val::of(i).mul(4)?)?.sub(1)?;
        b.claim(format!("u_{i}v_{i}"), (U, i), (V, i), label);
    }
    for i in 1..=n {
        let a = b.label(A, i);
        let label = if odd { a.add(1u64)? } else { a.sub(1)? };
        b.claim(format!("v_{i}a_{i}"), (V, i), (A, i), label);
    }
    for i in 1..=n {
        let bl = b.label(B, i);
        let label = if odd { bl } else { bl.sub(2)? };
        b.claim(format!("v_{i}b_{i}"), (V, i), (B, i), label);
    }
    Ok(())
}
