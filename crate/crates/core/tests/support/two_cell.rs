//! Unit, associativity and interchange laws for multinatural transformations.

use freeperm::multicat::{
    enumerate_multifunctors, enumerate_multinats, hcomp_multinat, validate_multinat, vcomp_multinat,
    IdentityMultifunctor, MulticategoryPresentation, MultinatTransformation, TableMultifunctor,
};
use freeperm::Bounds;

pub const B: Bounds = Bounds {
    arity: 3,
    profile: 3,
    parallel: 1,
};

pub type Nat<'a> = MultinatTransformation<TableMultifunctor<'a>, TableMultifunctor<'a>>;

pub fn all_nats<'a>(fs: &[TableMultifunctor<'a>]) -> Vec<Nat<'a>> {
    let mut out = Vec::new();
    for f in fs {
        for g in fs {
            out.extend(enumerate_multinats(f, g, &B).unwrap());
        }
    }
    out
}

/// Checks every law on `M → N → P` and returns the number of instances.
pub fn laws(m: &MulticategoryPresentation, n: &MulticategoryPresentation, p: &MulticategoryPresentation) -> usize {
    let fs = enumerate_multifunctors(m, n, &B).unwrap();
    let gs = enumerate_multifunctors(n, p, &B).unwrap();
    assert!(!fs.is_empty() && !gs.is_empty());
    let lower = all_nats(&fs);
    let upper = all_nats(&gs);
    let mut count = 0;

    for theta in &lower {
        assert!(validate_multinat(theta, &B).passed());
        let left = vcomp_multinat(&MultinatTransformation::identity(theta.to_functor().clone()), theta).unwrap();
        let right = vcomp_multinat(theta, &MultinatTransformation::identity(theta.from_functor().clone())).unwrap();
        assert_eq!(&left, theta);
        assert_eq!(&right, theta);

        let id_n = MultinatTransformation::identity(IdentityMultifunctor::new(n.clone()));
        let whiskered = hcomp_multinat(&id_n, theta).unwrap();
        assert_eq!(whiskered.components(), theta.components());
        let id_m = MultinatTransformation::identity(IdentityMultifunctor::new(m.clone()));
        let whiskered = hcomp_multinat(theta, &id_m).unwrap();
        assert_eq!(whiskered.components(), theta.components());
        count += 4;
    }

    for a in &lower {
        for b in lower.iter().filter(|b| b.from_functor() == a.to_functor()) {
            let ba = vcomp_multinat(b, a).unwrap();
            for c in lower.iter().filter(|c| c.from_functor() == b.to_functor()) {
                let lhs = vcomp_multinat(&vcomp_multinat(c, b).unwrap(), a).unwrap();
                let rhs = vcomp_multinat(c, &ba).unwrap();
                assert_eq!(lhs, rhs);
                count += 1;
            }
            for a2 in &upper {
                for b2 in upper.iter().filter(|b2| b2.from_functor() == a2.to_functor()) {
                    let lhs = hcomp_multinat(&vcomp_multinat(b2, a2).unwrap(), &ba).unwrap();
                    let rhs = vcomp_multinat(
                        &hcomp_multinat(b2, b).unwrap(),
                        &hcomp_multinat(a2, a).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                    assert!(validate_multinat(&lhs, &B).passed());
                    count += 1;
                }
            }
        }
    }
    count
}

