use crate::error::QuandleError;
use crate::quandle::Elem;

/// A permutation of `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InnerPerm(Vec<Elem>);

impl InnerPerm {
    pub fn identity(n: usize) -> Self {
        InnerPerm((0..n).map(|x| x as Elem).collect())
    }

    pub fn from_images(images: Vec<Elem>) -> Result<Self, QuandleError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(QuandleError::InvalidParameter(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(InnerPerm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[Elem] {
        &self.0
    }

    /// `self` first, then `other` (right action).
    pub fn then(&self, other: &InnerPerm) -> InnerPerm {
        InnerPerm(self.0.iter().map(|&x| other.apply(x)).collect())
    }

    pub fn inverse(&self) -> InnerPerm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as Elem;
        }
        InnerPerm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn order(&self) -> usize {
        let id = InnerPerm::identity(self.len());
        let mut cur = self.clone();
        let mut k = 1;
        while cur != id {
            cur = cur.then(self);
            k += 1;
        }
        k
    }
}
