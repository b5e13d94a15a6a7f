//! The line-oriented instance format: parsing, canonical printing and
//! building engine objects.

use std::fmt;

use stablecx::{Algebra, AlgebraFlags, Complex, Error as EngineError, FPModule, FieldSpec, RMatrix, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDecl {
    pub name: String,
    pub p: u32,
    pub dim: usize,
    /// mult[i][j] = coordinates of e_i e_j.
    pub mult: Vec<Vec<Vec<u32>>>,
    pub unit: Vec<u32>,
    pub self_injective: bool,
    pub gldim: Option<usize>,
    pub line: usize,
}

/// A rows × cols matrix of algebra elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDecl {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<u32>>>,
}

impl MatrixDecl {
    fn zero(rows: usize, cols: usize, d: usize) -> Self {
        MatrixDecl { rows, cols, entries: vec![vec![vec![0; d]; cols]; rows] }
    }

    pub fn from_rmatrix(m: &RMatrix) -> Self {
        let entries = (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.entry(r, c).to_vec()).collect()).collect();
        MatrixDecl { rows: m.rows(), cols: m.cols(), entries }
    }

    fn to_rmatrix(&self, ring: &Ring) -> RMatrix {
        let flat: Vec<Vec<u32>> = self.entries.iter().flatten().cloned().collect();
        RMatrix::from_entries(ring, self.rows, self.cols, &flat).expect("entries have the algebra dimension")
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    /// Presentation matrix: generators × relations.
    pub matrix: MatrixDecl,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDecl {
    pub name: String,
    pub lo: i64,
    pub ranks: Vec<usize>,
    /// diffs[k] : degree lo + k → lo + k + 1.
    pub diffs: Vec<MatrixDecl>,
    pub line: usize,
}

impl ComplexDecl {
    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn from_complex(name: &str, x: &Complex) -> Self {
        ComplexDecl {
            name: name.to_string(),
            lo: x.lo(),
            ranks: x.ranks().to_vec(),
            diffs: (x.lo()..x.hi()).map(|i| MatrixDecl::from_rmatrix(&x.diff(i))).collect(),
            line: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub algebra: AlgebraDecl,
    pub modules: Vec<ModuleDecl>,
    pub complexes: Vec<ComplexDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn parse_num<T: std::str::FromStr>(line: usize, what: &str, s: &str) -> Result<T, ParseError> {
    s.parse().or_else(|_| err(line, format!("invalid {what} `{s}`")))
}

/// `key=value` tokens after the keyword and name.
fn keyed<'a>(line: usize, tokens: &[&'a str], keys: &[&str]) -> Result<Vec<&'a str>, ParseError> {
    if tokens.len() != keys.len() {
        return err(line, format!("expected {}", keys.iter().map(|k| format!("{k}=…")).collect::<Vec<_>>().join(" ")));
    }
    tokens
        .iter()
        .zip(keys)
        .map(|(t, k)| match t.split_once('=') {
            Some((key, v)) if key == *k => Ok(v),
            _ => err(line, format!("expected `{k}=…`, found `{t}`")),
        })
        .collect()
}

fn parse_element(line: usize, s: &str, d: usize, p: u32) -> Result<Vec<u32>, ParseError> {
    let v: Vec<u32> = s.split_whitespace().map(|t| parse_num(line, "coefficient", t)).collect::<Result<_, _>>()?;
    if v.len() != d {
        return err(line, format!("expected {d} coefficients, found {}", v.len()));
    }
    if let Some(c) = v.iter().find(|&&c| c >= p) {
        return err(line, format!("coefficient {c} is not reduced modulo {p}"));
    }
    Ok(v)
}

fn index(line: usize, s: &str, bound: usize, what: &str) -> Result<usize, ParseError> {
    let i: usize = parse_num(line, what, s)?;
    if i >= bound {
        return err(line, format!("{what} {i} out of range (< {bound})"));
    }
    Ok(i)
}

enum Block {
    None,
    Algebra,
    Module(usize),
    Complex(usize, Option<usize>),
}

pub fn parse(text: &str) -> Result<InstanceFile, ParseError> {
    let mut algebra: Option<AlgebraDecl> = None;
    let mut seen_mult: Vec<bool> = Vec::new();
    let mut unit_seen = false;
    let mut modules: Vec<ModuleDecl> = Vec::new();
    let mut complexes: Vec<ComplexDecl> = Vec::new();
    let mut block = Block::None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, value) = match content.split_once('=') {
            Some((h, v)) => (h.trim(), Some(v.trim())),
            None => (content, None),
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "algebra" => {
                if algebra.is_some() {
                    return err(line, "only one algebra per file");
                }
                if tokens.len() < 2 {
                    return err(line, "algebra needs a name");
                }
                let v = keyed(line, &tokens[2..], &["p", "dim"])?;
                let p: u32 = parse_num(line, "prime", v[0])?;
                if FieldSpec::new(p as u64).is_err() {
                    return err(line, format!("{p} is not a prime"));
                }
                let dim: usize = parse_num(line, "dimension", v[1])?;
                if dim == 0 {
                    return err(line, "dimension must be positive");
                }
                algebra = Some(AlgebraDecl {
                    name: tokens[1].to_string(),
                    p,
                    dim,
                    mult: vec![vec![vec![0; dim]; dim]; dim],
                    unit: vec![0; dim],
                    self_injective: false,
                    gldim: None,
                    line,
                });
                seen_mult = vec![false; dim * dim];
                block = Block::Algebra;
            }
            "mult" | "unit" | "flag" => {
                let (Block::Algebra, Some(a)) = (&block, algebra.as_mut()) else {
                    return err(line, format!("`{}` outside the algebra block", tokens[0]));
                };
                match tokens[0] {
                    "mult" => {
                        let Some(value) = value else { return err(line, "expected `mult <i> <j> = …`") };
                        let idx: Vec<&str> = head.split_whitespace().skip(1).collect();
                        if idx.len() != 2 {
                            return err(line, "expected `mult <i> <j> = …`");
                        }
                        let i = index(line, idx[0], a.dim, "basis index")?;
                        let j = index(line, idx[1], a.dim, "basis index")?;
                        if std::mem::replace(&mut seen_mult[i * a.dim + j], true) {
                            return err(line, format!("duplicate product {i} {j}"));
                        }
                        a.mult[i][j] = parse_element(line, value, a.dim, a.p)?;
                    }
                    "unit" => {
                        let (Some(value), "unit") = (value, head) else { return err(line, "expected `unit = …`") };
                        if std::mem::replace(&mut unit_seen, true) {
                            return err(line, "duplicate unit");
                        }
                        a.unit = parse_element(line, value, a.dim, a.p)?;
                    }
                    _ => match (tokens.len(), tokens.get(1).map(|t| t.split_once('='))) {
                        (2, Some(None)) if tokens[1] == "self_injective" => a.self_injective = true,
                        (2, Some(Some(("gldim", n)))) => a.gldim = Some(parse_num(line, "global dimension", n)?),
                        _ => return err(line, "expected `flag self_injective` or `flag gldim=<n>`"),
                    },
                }
            }
            "module" => {
                let Some(a) = algebra.as_ref() else { return err(line, "module before the algebra") };
                if tokens.len() < 2 {
                    return err(line, "module needs a name");
                }
                let v = keyed(line, &tokens[2..], &["rows", "cols"])?;
                let rows = parse_num(line, "row count", v[0])?;
                let cols = parse_num(line, "column count", v[1])?;
                check_name(line, tokens[1], &modules, &complexes)?;
                modules.push(ModuleDecl { name: tokens[1].to_string(), matrix: MatrixDecl::zero(rows, cols, a.dim), line });
                block = Block::Module(modules.len() - 1);
            }
            "complex" => {
                let Some(a) = algebra.as_ref() else { return err(line, "complex before the algebra") };
                if tokens.len() < 2 {
                    return err(line, "complex needs a name");
                }
                let v = keyed(line, &tokens[2..], &["lo", "hi", "ranks"])?;
                let lo: i64 = parse_num(line, "degree", v[0])?;
                let hi: i64 = parse_num(line, "degree", v[1])?;
                let ranks: Vec<usize> = v[2].split(',').map(|r| parse_num(line, "rank", r)).collect::<Result<_, _>>()?;
                if hi < lo || ranks.len() as i64 != hi - lo + 1 {
                    return err(line, format!("ranks must list one rank per degree {lo}..={hi}"));
                }
                check_name(line, tokens[1], &modules, &complexes)?;
                let diffs = (0..ranks.len() - 1).map(|k| MatrixDecl::zero(ranks[k + 1], ranks[k], a.dim)).collect();
                complexes.push(ComplexDecl { name: tokens[1].to_string(), lo, ranks, diffs, line });
                block = Block::Complex(complexes.len() - 1, None);
            }
            "diff" => {
                let Block::Complex(c, ref mut current) = block else {
                    return err(line, "`diff` outside a complex block");
                };
                let x = &complexes[c];
                if tokens.len() != 2 {
                    return err(line, "expected `diff <i>`");
                }
                let i: i64 = parse_num(line, "degree", tokens[1])?;
                if i < x.lo || i >= x.hi() {
                    return err(line, format!("no differential leaves degree {i} in window {}..={}", x.lo, x.hi()));
                }
                *current = Some((i - x.lo) as usize);
            }
            "entry" => {
                let a = algebra.as_ref().expect("blocks follow the algebra");
                let target = match block {
                    Block::Module(m) => &mut modules[m].matrix,
                    Block::Complex(c, Some(k)) => &mut complexes[c].diffs[k],
                    Block::Complex(_, None) => return err(line, "`entry` before any `diff` line"),
                    _ => return err(line, "`entry` outside a module or complex block"),
                };
                let Some(value) = value else { return err(line, "expected `entry <r> <c> = …`") };
                let idx: Vec<&str> = head.split_whitespace().skip(1).collect();
                if idx.len() != 2 {
                    return err(line, "expected `entry <r> <c> = …`");
                }
                let r = index(line, idx[0], target.rows, "row")?;
                let c = index(line, idx[1], target.cols, "column")?;
                target.entries[r][c] = parse_element(line, value, a.dim, a.p)?;
            }
            other => return err(line, format!("unknown keyword `{other}`")),
        }
    }
    let Some(algebra) = algebra else { return err(1, "no algebra declared") };
    if !unit_seen {
        return err(algebra.line, "algebra has no `unit` line");
    }
    Ok(InstanceFile { algebra, modules, complexes })
}

fn check_name(line: usize, name: &str, modules: &[ModuleDecl], complexes: &[ComplexDecl]) -> Result<(), ParseError> {
    if modules.iter().any(|m| m.name == name) || complexes.iter().any(|c| c.name == name) {
        return err(line, format!("duplicate object name `{name}`"));
    }
    Ok(())
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn write_entries(f: &mut fmt::Formatter<'_>, m: &MatrixDecl) -> fmt::Result {
    for (r, row) in m.entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if e.iter().any(|&x| x != 0) {
                writeln!(f, "entry {r} {c} = {}", join(e))?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for InstanceFile {
    /// The canonical form: every product, nonzero entries only, blank lines between blocks.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.algebra;
        writeln!(f, "algebra {} p={} dim={}", a.name, a.p, a.dim)?;
        for i in 0..a.dim {
            for j in 0..a.dim {
                writeln!(f, "mult {i} {j} = {}", join(&a.mult[i][j]))?;
            }
        }
        writeln!(f, "unit = {}", join(&a.unit))?;
        if a.self_injective {
            writeln!(f, "flag self_injective")?;
        }
        if let Some(g) = a.gldim {
            writeln!(f, "flag gldim={g}")?;
        }
        for m in &self.modules {
            writeln!(f)?;
            writeln!(f, "module {} rows={} cols={}", m.name, m.matrix.rows, m.matrix.cols)?;
            write_entries(f, &m.matrix)?;
        }
        for x in &self.complexes {
            writeln!(f)?;
            let ranks: Vec<String> = x.ranks.iter().map(usize::to_string).collect();
            writeln!(f, "complex {} lo={} hi={} ranks={}", x.name, x.lo, x.hi(), ranks.join(","))?;
            for (k, d) in x.diffs.iter().enumerate() {
                if !d.is_zero() {
                    writeln!(f, "diff {}", x.lo + k as i64)?;
                    write_entries(f, d)?;
                }
            }
        }
        Ok(())
    }
}

/// Engine objects built from a parsed file.
#[derive(Clone, Debug)]
pub struct Instance {
    pub file: InstanceFile,
    pub ring: Ring,
    pub modules: Vec<(String, FPModule)>,
    pub complexes: Vec<(String, Complex)>,
}

impl Instance {
    pub fn module(&self, name: &str) -> Option<&FPModule> {
        self.modules.iter().find(|m| m.0 == name).map(|m| &m.1)
    }

    pub fn complex(&self, name: &str) -> Option<&Complex> {
        self.complexes.iter().find(|m| m.0 == name).map(|m| &m.1)
    }
}

/// Structural violations found while building engine objects.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct BuildError {
    pub line: usize,
    pub message: String,
}

pub fn build(file: &InstanceFile) -> Result<Instance, BuildError> {
    let a = &file.algebra;
    let field = FieldSpec::new(a.p as u64).map_err(|e| BuildError { line: a.line, message: e.to_string() })?;
    let alg = Algebra::new(field, a.mult.clone(), a.unit.clone())
        .map_err(|e| BuildError {
            line: a.line,
            message: match e {
                EngineError::NonAssociative { i, j, k } => {
                    format!("multiplication is not associative on basis triple ({i},{j},{k})")
                }
                other => other.to_string(),
            },
        })?
        .with_flags(AlgebraFlags { self_injective: a.self_injective, gldim: a.gldim });
    let ring = Ring::new(alg);
    let modules = file.modules.iter().map(|m| (m.name.clone(), FPModule::cokernel(&m.matrix.to_rmatrix(&ring)))).collect();
    let mut complexes = Vec::new();
    for x in &file.complexes {
        let diffs = x.diffs.iter().map(|d| d.to_rmatrix(&ring)).collect();
        let c = Complex::new(&ring, x.lo, x.ranks.clone(), diffs).map_err(|e| BuildError {
            line: x.line,
            message: match e {
                EngineError::NotAComplex { degree, succ } => {
                    format!("complex `{}`: d^{succ} d^{degree} ≠ 0, so d² fails at degree {degree}", x.name)
                }
                other => other.to_string(),
            },
        })?;
        complexes.push((x.name.clone(), c));
    }
    Ok(Instance { file: file.clone(), ring, modules, complexes })
}

/// Parses and builds; parse failures and structural failures are kept apart.
pub fn load(text: &str) -> Result<Result<Instance, BuildError>, ParseError> {
    parse(text).map(|f| build(&f))
}
