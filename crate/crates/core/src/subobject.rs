//! Containment paths, the injections they induce, and lazy coercions.
//!
//! A path is written the way the containment proof is built: its first step
//! is the outermost `left`/`right` constructor. Upcasting applies `inj₁`/`inj₂`
//! for the first step innermost, so the last step is the injection directly
//! under `inn`. Walking from the root descriptor therefore reads the steps
//! back to front.

use crate::error::{Error, Result};
use crate::functor::{has_shape, FunctorDesc, Payload, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

/// Proof that `root` contains some summand, as a list of directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContainsPath {
    root: FunctorDesc,
    steps: Vec<Direction>,
}

impl ContainsPath {
    /// `refl`.
    pub fn refl(root: FunctorDesc) -> Self {
        ContainsPath {
            root,
            steps: Vec::new(),
        }
    }

    pub fn new(root: FunctorDesc, steps: Vec<Direction>) -> Result<Self> {
        walk(&root, &steps)?;
        Ok(ContainsPath { root, steps })
    }

    pub fn root(&self) -> &FunctorDesc {
        &self.root
    }

    pub fn steps(&self) -> &[Direction] {
        &self.steps
    }

    /// The summand `A` in `root Contains A`.
    pub fn target(&self) -> &FunctorDesc {
        walk(&self.root, &self.steps).expect("path checked at construction")
    }
}

fn walk<'a>(root: &'a FunctorDesc, steps: &[Direction]) -> Result<&'a FunctorDesc> {
    let mut at = root;
    for (i, dir) in steps.iter().enumerate().rev() {
        at = match (at, dir) {
            (FunctorDesc::Sum(l, _), Direction::Left) => l,
            (FunctorDesc::Sum(_, r), Direction::Right) => r,
            _ => {
                return Err(Error::MalformedPath {
                    step: i,
                    at: at.to_string(),
                })
            }
        };
    }
    Ok(at)
}

/// Sub-descriptor selected by `steps` from `root`.
pub fn path_target<'a>(root: &'a FunctorDesc, steps: &[Direction]) -> Result<&'a FunctorDesc> {
    walk(root, steps)
}

/// Wraps `p` in the injection spine of `path` and applies `inn`.
pub fn upcast(path: &ContainsPath, p: Payload) -> Result<Term> {
    if !has_shape(path.target(), &p) {
        return Err(Error::ShapeMismatch {
            expected: path.target().to_string(),
        });
    }
    Ok(Term::inn(inject(&path.steps, p)))
}

fn inject(steps: &[Direction], p: Payload) -> Payload {
    steps.iter().fold(p, |acc, dir| match dir {
        Direction::Left => Payload::inl(acc),
        Direction::Right => Payload::inr(acc),
    })
}

/// Borrowing left inverse of [`upcast`]: the payload under the spine of
/// `path`, if `t` carries exactly that spine.
pub fn peel<'a>(path: &ContainsPath, t: &'a Term) -> Option<&'a Payload> {
    let mut at = t.node();
    for dir in path.steps.iter().rev() {
        at = match (dir, at) {
            (Direction::Left, Payload::InL(p)) | (Direction::Right, Payload::InR(p)) => p,
            _ => return None,
        };
    }
    Some(at)
}

/// Left inverse of [`upcast`].
pub fn downcast(path: &ContainsPath, t: &Term) -> Option<Payload> {
    peel(path, t).cloned()
}

/// An arrow `[A] (μ F) ↣ μ F` given by a containment path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Injection {
    path: ContainsPath,
}

impl Injection {
    pub fn new(path: ContainsPath) -> Self {
        Injection { path }
    }

    pub fn path(&self) -> &ContainsPath {
        &self.path
    }

    pub fn target(&self) -> &FunctorDesc {
        self.path.target()
    }

    pub fn apply(&self, p: Payload) -> Result<Term> {
        upcast(&self.path, p)
    }

    pub fn peel<'a>(&self, t: &'a Term) -> Option<&'a Payload> {
        peel(&self.path, t)
    }

    pub fn downcast(&self, t: &Term) -> Option<Payload> {
        downcast(&self.path, t)
    }

    /// Delays application of this injection to `payload`.
    pub fn lazy(&self, payload: Payload) -> LazyCoercion {
        LazyCoercion {
            injection: self.clone(),
            payload,
        }
    }
}

/// An injection together with its argument, not yet applied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LazyCoercion {
    pub injection: Injection,
    pub payload: Payload,
}

impl LazyCoercion {
    pub fn coerce(&self) -> Result<Term> {
        self.injection.apply(self.payload.clone())
    }

    pub fn into_term(self) -> Result<Term> {
        self.injection.apply(self.payload)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::BaseSet;
    use Direction::*;

    fn three_way() -> FunctorDesc {
        // (A ℕ ⊕ A ⊤) ⊕ X
        FunctorDesc::sum(
            FunctorDesc::sum(
                FunctorDesc::Atom(BaseSet::Nat),
                FunctorDesc::Atom(BaseSet::Unit),
            ),
            FunctorDesc::Rec,
        )
    }

    #[test]
    fn refl_targets_root() {
        let p = ContainsPath::refl(three_way());
        assert_eq!(p.target(), &three_way());
    }

    #[test]
    fn walk_reads_steps_back_to_front() {
        let p = ContainsPath::new(three_way(), vec![Right, Left]).unwrap();
        assert_eq!(p.target(), &FunctorDesc::Atom(BaseSet::Unit));
    }

    #[test]
    fn malformed_path_is_rejected() {
        let err = ContainsPath::new(three_way(), vec![Left, Right]).unwrap_err();
        assert!(matches!(err, Error::MalformedPath { step: 0, .. }));
        assert!(path_target(&FunctorDesc::Rec, &[Left]).is_err());
    }

    #[test]
    fn upcast_spine_order() {
        let path = ContainsPath::new(three_way(), vec![Right, Left]).unwrap();
        let t = upcast(&path, Payload::unit()).unwrap();
        assert_eq!(t.node(), &Payload::inl(Payload::inr(Payload::unit())));
        assert_eq!(downcast(&path, &t), Some(Payload::unit()));
    }

    #[test]
    fn upcast_checks_target_shape() {
        let path = ContainsPath::new(three_way(), vec![Right, Left]).unwrap();
        assert!(upcast(&path, Payload::nat(1)).is_err());
    }

    #[test]
    fn refl_upcast_is_inn() {
        let path = ContainsPath::refl(FunctorDesc::Atom(BaseSet::Nat));
        let t = upcast(&path, Payload::nat(4)).unwrap();
        assert_eq!(t.node(), &Payload::nat(4));
    }

    #[test]
    fn coerce_is_apply() {
        let inj = Injection::new(ContainsPath::new(three_way(), vec![Left, Left]).unwrap());
        let lazy = inj.lazy(Payload::nat(2));
        assert_eq!(lazy.coerce().unwrap(), inj.apply(Payload::nat(2)).unwrap());
    }
}
