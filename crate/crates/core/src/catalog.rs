//! Named small instances: the 19-element counterexample and `Z_4` over `Z_2`.

use alloc::vec;

use crate::congruence::{quotient_by, Congruence, NormalClifford, Quotient};
use crate::cross_section::CrossSection;
use crate::partial_bijection::PartialBijection;
use crate::semigroup::{cyclic_group, from_partial_bijections, FiniteInverseSemigroup, Generated};

/// Generators `r` and `s` of the counterexample, degree 6.
pub const COUNTEREXAMPLE_GENERATORS: [&str; 2] = ["(1,4,5,0,0,0)", "(0,5,4,0,0,6)"];

/// The inverse semigroup generated by `r = (1,4,5,0,0,0)` and
/// `s = (0,5,4,0,0,6)`, with indices of the elements its analysis names.
pub struct Counterexample {
    pub generated: Generated<PartialBijection>,
    pub r: usize,
    pub s: usize,
    /// `s*r`
    pub sr: usize,
    /// `(s*r)²`
    pub srsr: usize,
    /// `rs*`
    pub rs: usize,
    /// `(rs*)²`
    pub rsrs: usize,
    /// `ss*r`
    pub ssr: usize,
}

pub fn counterexample() -> Counterexample {
    let [r, s] = COUNTEREXAMPLE_GENERATORS.map(|t| t.parse::<PartialBijection>().expect("valid tuple"));
    let g = from_partial_bijections(&[r.clone(), s.clone()], 1000).expect("small closure");
    let sr = s.star().compose(&r).expect("same degree");
    let rs = r.compose(&s.star()).expect("same degree");
    let ssr = s.compose(&s.star()).and_then(|x| x.compose(&r)).expect("same degree");
    let ix = |x: &PartialBijection| g.index_of(x).expect("closed under products");
    Counterexample {
        r: ix(&r),
        s: ix(&s),
        sr: ix(&sr),
        srsr: ix(&sr.compose(&sr).expect("same degree")),
        rs: ix(&rs),
        rsrs: ix(&rs.compose(&rs).expect("same degree")),
        ssr: ix(&ssr),
        generated: g,
    }
}

impl Counterexample {
    pub fn semigroup(&self) -> &FiniteInverseSemigroup {
        &self.generated.semigroup
    }

    /// `E ∪ {s*r, rs*}`.
    pub fn kernel(&self) -> NormalClifford {
        let s = self.semigroup();
        let mut k = s.idempotents();
        k.extend([self.sr, self.rs]);
        NormalClifford::new(s, &k).expect("normal Clifford")
    }

    /// The classes `{s*r, (s*r)²}` and `{rs*, (rs*)²}` with every other
    /// element a singleton.
    pub fn naive_partition(&self) -> Congruence {
        let n = self.semigroup().size();
        let pairs = [self.sr, self.srsr, self.rs, self.rsrs];
        let mut classes = vec![vec![self.sr, self.srsr], vec![self.rs, self.rsrs]];
        classes.extend((0..n).filter(|a| !pairs.contains(a)).map(|a| vec![a]));
        Congruence::from_classes(n, classes).expect("a partition")
    }
}

/// `T = Z_4`, `N = {0, 2}` and the section `0̄ ↦ 0`, `1̄ ↦ 1`.
pub fn z4_over_z2() -> (FiniteInverseSemigroup, NormalClifford, Quotient, CrossSection) {
    let t = cyclic_group(4);
    let n = NormalClifford::new(&t, &[0, 2]).expect("subgroup");
    let q = quotient_by(&t, &n);
    let mut reps = vec![0; 2];
    reps[q.project(1)] = 1;
    let c = CrossSection::new(&q, reps).expect("one per class");
    (t, n, q, c)
}
