use crate::duality::{deficiency_modules, sample_with_deficiency, DeficiencyModule, LinearSystem};
use crate::error::Result;
use crate::module::PresentedModule;
use crate::oracle::DenseModule;
use crate::poly::{Polynomial, Ring};
use crate::resolution::{minimal_free_resolution, BettiTable, FreeResolution};

/// A named homogeneous ideal.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: Ring,
    pub ideal: Vec<Polynomial>,
}

/// Everything the verifiers need about `M = R/I`, computed once.
#[derive(Clone, Debug)]
pub struct EntryContext {
    pub entry: CorpusEntry,
    pub module: PresentedModule,
    pub resolution: FreeResolution,
    pub betti: BettiTable,
    /// `K^i_M` for `0 ≤ i ≤ dim M`; empty for the zero module.
    pub deficiency: Vec<DeficiencyModule>,
    /// Betti tables of the `K^i_M`.
    pub deficiency_betti: Vec<BettiTable>,
    pub oracle: DenseModule,
}

impl EntryContext {
    pub fn new(entry: &CorpusEntry) -> Result<Self> {
        let module = PresentedModule::quotient_ring(&entry.ring, &entry.ideal)?;
        let resolution = minimal_free_resolution(&module);
        let betti = resolution.betti();
        let deficiency = if module.is_zero() {
            Vec::new()
        } else {
            deficiency_modules(&module)?
        };
        let deficiency_betti = deficiency
            .iter()
            .map(|k| minimal_free_resolution(&k.module).betti())
            .collect();
        let oracle = DenseModule::quotient(*entry.ring.field(), entry.ring.nvars(), &entry.ideal);
        Ok(EntryContext {
            entry: entry.clone(),
            module,
            resolution,
            betti,
            deficiency,
            deficiency_betti,
            oracle,
        })
    }

    pub fn name(&self) -> &str {
        &self.entry.name
    }

    pub fn ring(&self) -> &Ring {
        &self.entry.ring
    }

    /// Number of variables `r`.
    pub fn r(&self) -> usize {
        self.entry.ring.nvars()
    }

    /// `dim M`; `-1` for the zero module.
    pub fn dim(&self) -> i32 {
        self.module.krull_dim()
    }

    pub fn codim(&self) -> i32 {
        self.r() as i32 - self.dim().max(0)
    }

    pub fn depth(&self) -> Option<usize> {
        self.resolution.length().map(|pd| self.r() - pd)
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth().is_some_and(|t| t as i32 == self.dim())
    }

    /// `μ(I)`.
    pub fn mu_ideal(&self) -> usize {
        self.betti.rank(1)
    }

    /// `a(I)`; `None` for the zero ideal.
    pub fn initial_degree(&self) -> Option<i32> {
        self.module.basis().initial_degree()
    }

    /// `dim H^i_m(M)_n`.
    pub fn local_dim(&self, i: i64, n: i32) -> usize {
        if i < 0 {
            return 0;
        }
        self.deficiency
            .get(i as usize)
            .map_or(0, |k| k.local_cohomology_dim(n))
    }

    /// `e(H^i_m(M))`; `None` stands for `-∞`.
    pub fn local_end(&self, i: usize) -> Option<i32> {
        self.deficiency
            .get(i)
            .and_then(|k| k.end_of_local_cohomology())
    }

    /// `β_{k,n}(K^i_M)`.
    pub fn deficiency_beta(&self, i: usize, k: i64, n: i32) -> usize {
        if k < 0 {
            return 0;
        }
        self.deficiency_betti
            .get(i)
            .map_or(0, |b| b.get(k as usize, n))
    }

    /// `dim Tor_{s+i}(K, H^i_m(M))_{s+j}`, i.e. `β_{r-s-i, r-s-j}(K^i_M)`.
    pub fn tor_of_local(&self, i: usize, s: i64, j: i32) -> usize {
        let r = self.r() as i64;
        self.deficiency_beta(i, r - s - i as i64, (r - s) as i32 - j)
    }

    pub fn regularity(&self) -> Option<i32> {
        self.betti.regularity()
    }

    /// A certified linear system of `s` forms.
    pub fn sample(&self, s: usize, strong: bool, seed: u64) -> Result<LinearSystem> {
        sample_with_deficiency(&self.module, &self.deficiency, s, strong, seed)
    }
}
