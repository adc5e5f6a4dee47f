//! Built-in permutative categories.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

use super::presentation::{CObj, MorId, PermCatBuilder, PermCatPresentation};

/// A commutative monoid as a discrete permutative category: objects are the
/// elements, `⊕` is the product, and the only morphisms are identities.
pub fn discrete_commutative_monoid(m: &FiniteMonoid) -> Result<PermCatPresentation> {
    if !m.is_commutative() {
        return Err(Error::Invalid(format!("monoid {} is not commutative", m.name())));
    }
    let mut b = PermCatBuilder::new(format!("discrete_commutative_monoid({})", m.name()));
    let n = m.order();
    let objs: Vec<CObj> = (0..n)
        .map(|a| b.object(m.element_name(a)))
        .collect::<Result<_>>()?;
    let ids: Vec<MorId> = (0..n)
        .map(|a| b.morphism(format!("1_{}", m.element_name(a)), objs[a], objs[a]))
        .collect::<Result<_>>()?;
    b.unit_object(objs[m.identity()])?;
    for a in 0..n {
        b.identity(objs[a], ids[a])?;
        b.composition(ids[a], ids[a], ids[a])?;
        for c in 0..n {
            let p = m.mul(a, c);
            b.object_sum(objs[a], objs[c], objs[p])?;
            b.morphism_sum(ids[a], ids[c], ids[p])?;
            b.symmetry(objs[a], objs[c], ids[p])?;
        }
    }
    b.build()
}

/// Objects `ℤ/n` under addition, `hom(a, a) = G` for an abelian group `G`
/// with composition and `⊕` both the group product, and no morphisms between
/// distinct objects. `ξ` is the identity everywhere.
pub fn group_enriched(n: usize, g: &FiniteMonoid) -> Result<PermCatPresentation> {
    if n == 0 {
        return Err(Error::Invalid("group_enriched needs at least one object".into()));
    }
    if !g.is_group() {
        return Err(Error::Invalid(format!("{} is not a group", g.name())));
    }
    if !g.is_commutative() {
        return Err(Error::Invalid(format!("group {} is not abelian", g.name())));
    }
    let mut b = PermCatBuilder::new(format!("group_enriched({n},{})", g.name()));
    let objs: Vec<CObj> = (0..n).map(|a| b.object(a.to_string())).collect::<Result<_>>()?;
    let k = g.order();
    // morphism g@a has id a*k + g
    for a in 0..n {
        for e in 0..k {
            b.morphism(format!("{}@{a}", g.element_name(e)), objs[a], objs[a])?;
        }
    }
    let mor = |a: usize, e: usize| MorId(a * k + e);
    b.unit_object(objs[0])?;
    for a in 0..n {
        b.identity(objs[a], mor(a, g.identity()))?;
        for e in 0..k {
            for f in 0..k {
                b.composition(mor(a, e), mor(a, f), mor(a, g.mul(e, f)))?;
            }
        }
        for c in 0..n {
            let s = (a + c) % n;
            b.object_sum(objs[a], objs[c], objs[s])?;
            b.symmetry(objs[a], objs[c], mor(s, g.identity()))?;
            for e in 0..k {
                for f in 0..k {
                    b.morphism_sum(mor(a, e), mor(c, f), mor(s, g.mul(e, f)))?;
                }
            }
        }
    }
    b.build()
}

/// `group_enriched(2, ℤ/2)` with the symmetry twisted by a sign:
/// `ξ_{a,b}` is the non-identity element exactly when `a = b = 1`. The
/// only builtin-sized example here whose symmetry is not an identity.
pub fn sign_category() -> PermCatPresentation {
    let c = group_enriched(2, &FiniteMonoid::cyclic(2)).expect("ℤ/2 is abelian");
    let one = c.object_id("1").expect("object 1");
    let minus = c.mor_id("1@0").expect("morphism 1@0");
    let mut c = c.with_symmetry(one, one, minus);
    c.rename("sign_category");
    c
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinPermcat {
    DiscreteCommutativeMonoid(FiniteMonoid),
    GroupEnriched(usize, FiniteMonoid),
}

impl FromStr for BuiltinPermcat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownKind(s.to_string());
        if let Some(rest) = s
            .strip_prefix("discrete_commutative_monoid(")
            .and_then(|r| r.strip_suffix(')'))
        {
            return Ok(Self::DiscreteCommutativeMonoid(rest.parse()?));
        }
        if let Some(rest) = s.strip_prefix("group_enriched(").and_then(|r| r.strip_suffix(')')) {
            let (n, g) = rest.split_once(',').ok_or_else(unknown)?;
            let n = n.trim().parse().map_err(|_| unknown())?;
            return Ok(Self::GroupEnriched(n, g.parse()?));
        }
        Err(unknown())
    }
}

impl BuiltinPermcat {
    pub fn build(&self) -> Result<PermCatPresentation> {
        match self {
            Self::DiscreteCommutativeMonoid(m) => discrete_commutative_monoid(m),
            Self::GroupEnriched(n, g) => group_enriched(*n, g),
        }
    }
}

/// Builds a builtin from its name, e.g. `group_enriched(2,Z/3)` or
/// `discrete_commutative_monoid(Z/2)`.
pub fn builtin_permcat(kind: &str) -> Result<PermCatPresentation> {
    kind.parse::<BuiltinPermcat>()?.build()
}
