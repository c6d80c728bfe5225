use std::collections::BTreeMap;
use std::fmt::Write as _;

use complex::{assemble_with, verify, vertex_stabilizer, AssemblyOptions, Basis, ChainComplex};
use polyhedron::{build_complex, validate, CellComplex, CoxeterMatrix};
use serde::Serialize;
use torsion::{criterion, Verdict};
use zlinalg::HomologyGroup;

use crate::classes::{edge_classes, EdgeClassPartition};
use crate::error::ReportError;
use crate::formulas::{
    cf_terms, class_count_terms, euler_terms, CfTerms, ChiTerms, ClassCountTerms,
};

/// Pipeline settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Basis of the chain complex whose homology is reported.
    pub basis: Basis,
    pub skip_criterion: bool,
    /// Labelling variant for Δ(2,3,5) vertices.
    pub delta235_swap: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            basis: Basis::Transformed,
            skip_criterion: false,
            delta235_swap: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlagStatus {
    Pass,
    Fail,
    Skipped,
}

impl FlagStatus {
    fn of(ok: bool) -> Self {
        if ok {
            FlagStatus::Pass
        } else {
            FlagStatus::Fail
        }
    }
}

/// One consistency check between the computed invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub name: &'static str,
    pub status: FlagStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub rank: usize,
    pub torsion: Vec<String>,
    pub group: String,
}

impl From<&HomologyGroup> for HomologySummary {
    fn from(h: &HomologyGroup) -> Self {
        HomologySummary {
            rank: h.rank,
            torsion: h.torsion.iter().map(ToString::to_string).collect(),
            group: h.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCounts {
    pub faces: usize,
    pub edges: usize,
    pub vertices: usize,
    /// Vertex stabilizer types with multiplicities, sorted by type.
    pub vertex_types: Vec<(String, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub vertex: String,
    pub stabilizer: String,
    pub shape: (usize, usize),
    pub rank: usize,
    pub reduced_shape: (usize, usize),
    pub max_minor_size: usize,
    pub minors_checked: u64,
    pub unit_divisors: bool,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionSummary {
    pub holds: bool,
    pub unit_divisors: bool,
    pub blocks: Vec<BlockSummary>,
}

impl From<&Verdict> for CriterionSummary {
    fn from(v: &Verdict) -> Self {
        CriterionSummary {
            holds: v.holds,
            unit_divisors: v.unit_divisors,
            blocks: v
                .blocks
                .iter()
                .map(|b| BlockSummary {
                    vertex: b.vertex.clone(),
                    stabilizer: b.stabilizer.to_string(),
                    shape: b.report.original_size,
                    rank: b.rank,
                    reduced_shape: b.report.reduced_size,
                    max_minor_size: b.report.max_size_checked,
                    minors_checked: b.report.minors_checked,
                    unit_divisors: b.unit_divisors,
                    ok: b.report.ok,
                    witness: b.report.witness.as_ref().map(ToString::to_string),
                })
                .collect(),
        }
    }
}

/// Everything computed for one polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KReport {
    pub name: String,
    pub basis: String,
    pub cells: CellCounts,
    /// Ranks of `C₀ … C₃`.
    pub chain_ranks: [usize; 4],
    /// `H₀ … H₃`.
    pub homology: Vec<HomologySummary>,
    pub edge_classes: EdgeClassPartition,
    pub cf_terms: CfTerms,
    pub cf: i64,
    /// `cf` counted directly from the finite subgroups.
    pub class_count_terms: ClassCountTerms,
    pub class_count: i64,
    pub chi_terms: ChiTerms,
    pub chi: i64,
    pub criterion: Option<CriterionSummary>,
    pub flags: Vec<Flag>,
    /// Rank of `K₀ = H₀`, given only when every flag passes.
    pub k0_rank: Option<i64>,
    /// Rank of `K₁ = H₁`, given only when every flag passes.
    pub k1_rank: Option<i64>,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

impl KReport {
    /// No flag failed (skipped flags are allowed).
    pub fn all_pass(&self) -> bool {
        self.flags.iter().all(|f| f.status != FlagStatus::Fail)
    }

    pub fn flag(&self, name: &str) -> Option<&Flag> {
        self.flags.iter().find(|f| f.name == name)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.cells;
        let types: Vec<String> = c
            .vertex_types
            .iter()
            .map(|(t, n)| format!("{n} x {t}"))
            .collect();
        let _ = writeln!(s, "{}", self.name);
        let _ = writeln!(
            s,
            "  cells: {} faces, {} edges, {} vertices ({})",
            c.faces,
            c.edges,
            c.vertices,
            types.join(", ")
        );
        let [r0, r1, r2, r3] = self.chain_ranks;
        let _ = writeln!(
            s,
            "  chain ranks ({} basis): C0 {r0}, C1 {r1}, C2 {r2}, C3 {r3}",
            self.basis
        );
        for (k, h) in self.homology.iter().enumerate() {
            let _ = writeln!(s, "  H{k} = {}", h.group);
        }
        let t = &self.cf_terms;
        let _ = writeln!(
            s,
            "  cf  = {} = {} + {} + {} + {}   (identity, faces, {} edge classes, vertices)",
            self.cf,
            t.identity,
            t.faces,
            t.edge_classes,
            t.vertices,
            self.edge_classes.len()
        );
        let k = &self.class_count_terms;
        let _ = writeln!(
            s,
            "  classes counted directly = {} = {} + {} + {} + {}   (identity, reflections, rotations, vertices)",
            self.class_count, k.identity, k.reflections, k.rotations, k.vertices
        );
        let x = &self.chi_terms;
        let _ = writeln!(
            s,
            "  chi = {} = {} + {} - {} + {}   (3-cell, faces, edges, vertices)",
            self.chi, x.cell3, x.faces, -x.edges, x.vertices
        );
        for m in &self.edge_classes.merges {
            let _ = writeln!(
                s,
                "  merged {} ~ {} at {}",
                m.edges[0], m.edges[1], m.vertex
            );
        }
        match &self.criterion {
            None => {
                let _ = writeln!(s, "  minor criterion: skipped");
            }
            Some(cr) => {
                let failing = cr.blocks.iter().filter(|b| !b.ok).count();
                let _ = writeln!(
                    s,
                    "  minor criterion: {} ({} vertex blocks, {} failing)",
                    if cr.holds { "holds" } else { "fails" },
                    cr.blocks.len(),
                    failing
                );
                for b in cr.blocks.iter().filter(|b| !b.ok) {
                    let _ = writeln!(
                        s,
                        "    {} [{}]: {}",
                        b.vertex,
                        b.stabilizer,
                        b.witness.as_deref().unwrap_or("")
                    );
                }
            }
        }
        let _ = writeln!(s, "  checks:");
        for f in &self.flags {
            let status = match f.status {
                FlagStatus::Pass => "pass",
                FlagStatus::Fail => "FAIL",
                FlagStatus::Skipped => "skip",
            };
            let _ = writeln!(s, "    [{status}] {}: {}", f.name, f.detail);
        }
        match (self.k0_rank, self.k1_rank) {
            (Some(k0), Some(k1)) => {
                let _ = writeln!(s, "  K0 = {}", free_group(k0));
                let _ = writeln!(s, "  K1 = {}", free_group(k1));
            }
            _ => {
                let _ = writeln!(s, "  K-theory not stated: some checks failed");
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        for w in &self.warnings {
            let _ = writeln!(s, "  warning: {w}");
        }
        s
    }
}

fn free_group(rank: i64) -> String {
    match rank {
        0 => "0".into(),
        1 => "Z".into(),
        r => format!("Z^{r}"),
    }
}

/// A report together with the chain complex it was computed from.
#[derive(Clone, Debug)]
pub struct Computation {
    pub complex: CellComplex,
    pub chain: ChainComplex,
    pub report: KReport,
}

/// Builds and validates the cell complex of a Coxeter matrix.
pub fn checked_complex(cm: &CoxeterMatrix) -> Result<CellComplex, ReportError> {
    let cc = build_complex(cm)?;
    let diags = validate(&cc);
    if !diags.is_empty() {
        return Err(ReportError::Invalid(diags));
    }
    Ok(cc)
}

/// Runs the full pipeline and cross-checks the two computations of the
/// ranks: Smith normal forms of the boundary maps against the closed
/// formulas for `cf` and `χ`.
pub fn compute(cm: &CoxeterMatrix, opts: ReportOptions) -> Result<Computation, ReportError> {
    let cc = checked_complex(cm)?;
    let assembly = |basis| AssemblyOptions {
        basis,
        delta235_swap: opts.delta235_swap,
        ..AssemblyOptions::default()
    };
    let chain = assemble_with(&cc, assembly(opts.basis))?;
    let homology = chain.homology()?;

    let verdict = if opts.skip_criterion {
        None
    } else if opts.basis == Basis::Transformed {
        Some(criterion(&chain)?)
    } else {
        Some(criterion(&assemble_with(
            &cc,
            assembly(Basis::Transformed),
        )?)?)
    };

    let classes = edge_classes(&cc);
    let cf_t = cf_terms(&cc, &classes)?;
    let count_t = class_count_terms(&cc, &classes);
    let chi_t = euler_terms(&cc);
    let (cf, chi) = (cf_t.total(), chi_t.total());
    let [h0, h1, h2, h3] = &homology;

    let mut flags = Vec::new();
    let mut flag = |name, ok, detail: String| {
        flags.push(Flag {
            name,
            status: FlagStatus::of(ok),
            detail,
        })
    };
    flag(
        "boundaries",
        verify(&chain),
        "d1*d2 = 0 and d2*d3 = 0 exactly".into(),
    );
    flag(
        "h2_h3_vanish",
        h2.is_zero() && h3.is_zero(),
        format!("H2 = {h2}, H3 = {h3}"),
    );
    flag(
        "torsion_free",
        h0.is_torsion_free() && h1.is_torsion_free(),
        format!("H0 = {h0}, H1 = {h1}"),
    );
    flag(
        "rank_h0_cf",
        h0.rank as i64 == cf,
        format!("rank H0 = {}, cf = {cf}", h0.rank),
    );
    flag(
        "rank_h1_cf_chi",
        h1.rank as i64 == cf - chi,
        format!("rank H1 = {}, cf - chi = {}", h1.rank, cf - chi),
    );
    let alternating = chain.euler_characteristic();
    flag(
        "euler",
        alternating == chi,
        format!("r0 - r1 + r2 - r3 = {alternating}, formula = {chi}"),
    );
    match &verdict {
        None => flags.push(Flag {
            name: "criterion",
            status: FlagStatus::Skipped,
            detail: "minor criterion not run".into(),
        }),
        Some(v) => {
            let detail = match (v.holds, h0.is_torsion_free()) {
                (true, true) => "all vertex-block minors in {-1,0,1}; H0 torsion-free as implied",
                (true, false) => "criterion holds but H0 has torsion: inconsistent",
                (false, _) => "some vertex block has a minor outside {-1,0,1}",
            };
            flags.push(Flag {
                name: "criterion",
                status: FlagStatus::of(v.holds && h0.is_torsion_free()),
                detail: detail.into(),
            });
        }
    }

    let mut notes = Vec::new();
    if !classes.merges.is_empty() {
        notes.push(format!(
            "edge classes use a reconstructed local continuation rule ({} merge(s)); \
             rank H0 = cf checks it",
            classes.merges.len()
        ));
    }
    if cf != count_t.total() {
        notes.push(format!(
            "closed cf formula gives {cf} but the direct class count gives {}; rank H0 = {}",
            count_t.total(),
            h0.rank
        ));
    }
    if opts.delta235_swap {
        notes.push("alternative labelling of the Delta(2,3,5) classes in use".into());
    }

    let passed = flags.iter().all(|f| f.status != FlagStatus::Fail);
    let mut warnings = Vec::new();
    for f in flags.iter().filter(|f| f.status == FlagStatus::Fail) {
        warnings.push(format!("{} failed: {}", f.name, f.detail));
    }

    let mut types: BTreeMap<_, usize> = BTreeMap::new();
    for v in &cc.vertices {
        *types.entry(vertex_stabilizer(&v.vtype)).or_default() += 1;
    }
    let report = KReport {
        name: cm.name().to_string(),
        basis: opts.basis.to_string(),
        cells: CellCounts {
            faces: cc.faces.len(),
            edges: cc.edges.len(),
            vertices: cc.vertices.len(),
            vertex_types: types.into_iter().map(|(t, n)| (t.to_string(), n)).collect(),
        },
        chain_ranks: chain.ranks(),
        homology: homology.iter().map(HomologySummary::from).collect(),
        edge_classes: classes,
        cf_terms: cf_t,
        cf,
        class_count_terms: count_t,
        class_count: count_t.total(),
        chi_terms: chi_t,
        chi,
        criterion: verdict.as_ref().map(CriterionSummary::from),
        k0_rank: passed.then_some(cf),
        k1_rank: passed.then_some(cf - chi),
        flags,
        notes,
        warnings,
    };
    Ok(Computation {
        complex: cc,
        chain,
        report,
    })
}

/// [`compute`], keeping only the report.
pub fn report(cm: &CoxeterMatrix, opts: ReportOptions) -> Result<KReport, ReportError> {
    compute(cm, opts).map(|c| c.report)
}
