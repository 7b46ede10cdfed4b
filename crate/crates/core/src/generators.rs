//! Constructors for the labeled graph families.
//!
//! Vertex ids are the role letter followed by the index (`v3`, `u0`, `a2`).
//! All vertices get weight 1, so every defined edge also satisfies the
//! max-membership rule.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, RoughGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Comb,
    Ladder,
    PathStar,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Comb,
        Family::Ladder,
        Family::PathStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Comb => "comb",
            Family::Ladder => "ladder",
            Family::PathStar => "path_star",
        }
    }

    /// Smallest admissible size parameter.
    pub fn min_size(self) -> usize {
        match self {
            Family::Path | Family::Star | Family::Ladder => 2,
            Family::Cycle | Family::Comb => 3,
            Family::PathStar => 1,
        }
    }

    pub fn generate(self, n: usize) -> Result<FamilyInstance> {
        match self {
            Family::Path => make_path(n),
            Family::Cycle => make_cycle(n),
            Family::Star => make_star(n),
            Family::Comb => make_comb(n),
            Family::Ladder => make_ladder(n),
            Family::PathStar => make_path_star(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL.into_iter().find(|f| f.name() == norm).ok_or_else(|| {
            Error::parameter(format!(
                "unknown family `{s}` (expected one of path, cycle, star, comb, ladder, path_star)"
            ))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RoleKind {
    /// Star center `u0`.
    Apex,
    U,
    V,
    A,
    B,
}

impl RoleKind {
    fn letter(self) -> char {
        match self {
            RoleKind::Apex | RoleKind::U => 'u',
            RoleKind::V => 'v',
            RoleKind::A => 'a',
            RoleKind::B => 'b',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Role {
    pub kind: RoleKind,
    pub index: usize,
}

impl Role {
    pub fn new(kind: RoleKind, index: usize) -> Self {
        Role { kind, index }
    }

    pub fn id(self) -> String {
        format!("{}{}", self.kind.letter(), self.index)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.letter(), self.index)
    }
}

/// A generated graph together with the structural role of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    pub n: usize,
    pub graph: RoughGraph,
    roles: Vec<Role>,
}

impl FamilyInstance {
    fn build(family: Family, n: usize, roles: Vec<Role>, edges: Vec<(Role, Role)>) -> Result<Self> {
        let ids: Vec<String> = roles.iter().map(|r| r.id()).collect();
        let edges: Vec<(String, String)> = edges.into_iter().map(|(a, b)| (a.id(), b.id())).collect();
        let graph = RoughGraph::unit(&ids, &edges)?;
        Ok(Self {
            family,
            n,
            graph,
            roles,
        })
    }

    /// Role of the vertex at position `v`.
    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Position of the vertex playing `role`.
    pub fn vertex(&self, kind: RoleKind, index: usize) -> usize {
        let role = Role::new(kind, index);
        self.roles
            .iter()
            .position(|&r| r == role)
            .unwrap_or_else(|| panic!("{} has no vertex {role}", self.family))
    }

    /// The edge between two roles; panics if the family does not define it.
    pub fn edge(&self, a: (RoleKind, usize), b: (RoleKind, usize)) -> Edge {
        let e = Edge::new(self.vertex(a.0, a.1), self.vertex(b.0, b.1));
        assert!(self.graph.edges().binary_search(&e).is_ok(), "missing edge");
        e
    }
}

fn check(family: Family, n: usize) -> Result<()> {
    if n < family.min_size() {
        return Err(Error::parameter(format!(
            "{family} needs size at least {}, got {n}",
            family.min_size()
        )));
    }
    Ok(())
}

fn indexed(kind: RoleKind, n: usize) -> impl Iterator<Item = Role> {
    (1..=n).map(move |i| Role::new(kind, i))
}

fn rail(kind: RoleKind, n: usize) -> impl Iterator<Item = (Role, Role)> {
    (1..n).map(move |i| (Role::new(kind, i), Role::new(kind, i + 1)))
}

fn rungs(from: RoleKind, to: RoleKind, n: usize) -> impl Iterator<Item = (Role, Role)> {
    (1..=n).map(move |i| (Role::new(from, i), Role::new(to, i)))
}

/// Path `v1 .. vn` with edges `v_i v_{i+1}`.
pub fn make_path(n: usize) -> Result<FamilyInstance> {
    check(Family::Path, n)?;
    FamilyInstance::build(
        Family::Path,
        n,
        indexed(RoleKind::V, n).collect(),
        rail(RoleKind::V, n).collect(),
    )
}

/// Path plus the closing edge `v_n v_1`.
pub fn make_cycle(n: usize) -> Result<FamilyInstance> {
    check(Family::Cycle, n)?;
    let mut edges: Vec<_> = rail(RoleKind::V, n).collect();
    edges.push((Role::new(RoleKind::V, n), Role::new(RoleKind::V, 1)));
    FamilyInstance::build(Family::Cycle, n, indexed(RoleKind::V, n).collect(), edges)
}

/// Apex `u0` joined to leaves `u1 .. ut`.
pub fn make_star(t: usize) -> Result<FamilyInstance> {
    check(Family::Star, t)?;
    let apex = Role::new(RoleKind::Apex, 0);
    let roles = std::iter::once(apex).chain(indexed(RoleKind::U, t)).collect();
    let edges = indexed(RoleKind::U, t).map(|leaf| (apex, leaf)).collect();
    FamilyInstance::build(Family::Star, t, roles, edges)
}

/// Spine `u1 .. un` with a pendant `v_i` on every `u_i`.
pub fn make_comb(n: usize) -> Result<FamilyInstance> {
    check(Family::Comb, n)?;
    let roles = indexed(RoleKind::U, n).chain(indexed(RoleKind::V, n)).collect();
    let edges = rail(RoleKind::U, n).chain(rungs(RoleKind::U, RoleKind::V, n)).collect();
    FamilyInstance::build(Family::Comb, n, roles, edges)
}

/// Rails `u_i u_{i+1}`, `v_i v_{i+1}` and rungs `u_i v_i`.
pub fn make_ladder(n: usize) -> Result<FamilyInstance> {
    check(Family::Ladder, n)?;
    let roles = indexed(RoleKind::U, n).chain(indexed(RoleKind::V, n)).collect();
    let edges = rail(RoleKind::U, n)
        .chain(rail(RoleKind::V, n))
        .chain(rungs(RoleKind::U, RoleKind::V, n))
        .collect();
    FamilyInstance::build(Family::Ladder, n, roles, edges)
}

/// Path `u1 .. un`; each `u_i` carries `v_i`, which carries leaves `a_i`, `b_i`.
pub fn make_path_star(n: usize) -> Result<FamilyInstance> {
    check(Family::PathStar, n)?;
    let roles = indexed(RoleKind::U, n)
        .chain(indexed(RoleKind::V, n))
        .chain(indexed(RoleKind::A, n))
        .chain(indexed(RoleKind::B, n))
        .collect();
    let edges = rail(RoleKind::U, n)
        .chain(rungs(RoleKind::U, RoleKind::V, n))
        .chain(rungs(RoleKind::V, RoleKind::A, n))
        .chain(rungs(RoleKind::V, RoleKind::B, n))
        .collect();
    FamilyInstance::build(Family::PathStar, n, roles, edges)
}
