//! Command-line front end. Every command writes deterministic output either
//! as aligned text or as tab-separated records, one per line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{int, ProjPoint, Rat, Surd};
use crate::cells::cm_cell_report;
use crate::chars::{
    import_raw, load_table, tensor_decompose, wedge_class_function, wedge_total, write_table, CharacterTable,
    TableProvider, DATA_DIR_ENV,
};
use crate::error::{Error, Result};
use crate::onewtype::{classify, classify_at};
use crate::rootsys::CartanType;
use crate::verify::{verify_all, Status, GROUPS};

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Exact one-W-type classification and cuspidal Calogero-Moser cells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Irreps affording one-W-type modules, with their parameter loci.
    Classify(GroupArgs),
    /// Decompose sigma (x) wedge(h), or one exterior power with --wedge.
    Decompose {
        #[command(flatten)]
        group: GroupArgs,
        /// Irrep label or alias, `trivial` or `sgn`.
        #[arg(long)]
        rep: String,
        /// Restrict to the l-th exterior power.
        #[arg(long)]
        wedge: Option<usize>,
    },
    /// Lower and upper bounds for the cuspidal Calogero-Moser cell.
    Cells(GroupArgs),
    /// Print the character table.
    Table(GroupArgs),
    /// Run every reproduction check; exits non-zero on any failure.
    VerifyPaper {
        #[command(flatten)]
        common: CommonArgs,
        /// Run one check group (name or criterion number).
        #[arg(long)]
        only: Option<String>,
    },
    /// Re-validate every table file in the data directory.
    CheckData(CommonArgs),
    /// Name and validate a raw table dump, writing the named table.
    #[command(hide = true)]
    ImportRaw {
        input: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    #[arg(long, env = DATA_DIR_ENV)]
    pub data_dir: Option<PathBuf>,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Cartan type, e.g. `F4`, `B`, `D9`.
    #[arg(long = "type")]
    pub cartan_type: String,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Equal parameters `c_s = c_l`.
    #[arg(long, group = "param")]
    pub equal: bool,
    /// Parameter ratio `c_s/c_l` as `p/q`, or `i` / `-i` for `+-sqrt(-1)`.
    #[arg(long, group = "param", allow_hyphen_values = true)]
    pub ratio: Option<String>,
    #[arg(long, group = "param")]
    pub cl_zero: bool,
    #[arg(long, group = "param")]
    pub cs_zero: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

impl CommonArgs {
    pub fn provider(&self) -> TableProvider {
        let data = self.data_dir.clone().unwrap_or_else(crate::chars::default_data_dir);
        TableProvider::new(data, self.cache_dir.clone())
    }
}

impl GroupArgs {
    pub fn cartan_type(&self) -> Result<CartanType> {
        CartanType::parse(&self.cartan_type, self.rank)
    }

    /// The parameter point, if one was given.
    pub fn point(&self) -> Result<Option<ProjPoint>> {
        if self.equal {
            return Ok(Some(ProjPoint::ratio(int(1))));
        }
        if self.cl_zero {
            return Ok(Some(ProjPoint::ClZero));
        }
        if self.cs_zero {
            return Ok(Some(ProjPoint::ratio(int(0))));
        }
        self.ratio.as_deref().map(parse_point).transpose()
    }
}

/// `p/q`, an integer, or `i`, `-i`, `sqrt(-1)`, `-sqrt(-1)`.
pub fn parse_point(s: &str) -> Result<ProjPoint> {
    let t = s.trim();
    match t {
        "i" | "+i" | "sqrt(-1)" => return Ok(ProjPoint::Ratio(Surd::imaginary_unit(1))),
        "-i" | "-sqrt(-1)" => return Ok(ProjPoint::Ratio(Surd::imaginary_unit(-1))),
        _ => {}
    }
    let r: Rat = t.parse().map_err(|_| Error::InvalidLabel(format!("parameter ratio {s}; expected p/q, i or -i")))?;
    Ok(ProjPoint::ratio(r))
}

/// Parses arguments, runs the command, and returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            2
        }
    }
}

/// Runs one command, writing to `out`; returns the exit code.
pub fn run(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Classify(g) => cmd_classify(g, out),
        Command::Decompose { group, rep, wedge } => cmd_decompose(group, rep, *wedge, out),
        Command::Cells(g) => cmd_cells(g, out),
        Command::Table(g) => cmd_table(g, out),
        Command::VerifyPaper { common, only } => cmd_verify(common, only.as_deref(), out),
        Command::CheckData(common) => cmd_check_data(common, out),
        Command::ImportRaw { input, output, common } => {
            let t = import_raw(&std::fs::read_to_string(input)?)?;
            std::fs::write(output, write_table(&t))?;
            emit(
                out,
                common.format,
                &format!("imported {} ({} classes)\n", t.cartan_type(), t.num_classes()),
                &[vec!["import".into(), t.cartan_type().to_string(), t.num_classes().to_string()]],
            )?;
            Ok(0)
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, text: &str, records: &[Vec<String>]) -> Result<()> {
    match format {
        Format::Text => write!(out, "{text}")?,
        Format::Records => {
            for r in records {
                writeln!(out, "{}", r.join("\t"))?;
            }
        }
    }
    Ok(())
}

fn cmd_classify(g: &GroupArgs, out: &mut dyn Write) -> Result<i32> {
    let ty = g.cartan_type()?;
    let provider = g.common.provider();
    if let Some(p) = g.point()? {
        let labels = classify_at(ty, &provider, &p)?;
        let names: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        let text = if names.is_empty() {
            format!("{ty} at {p}: none\n")
        } else {
            format!("{ty} at {p}: {}\n", names.join(", "))
        };
        let records: Vec<Vec<String>> =
            names.iter().map(|n| vec!["classify".into(), ty.to_string(), n.clone(), p.to_string()]).collect();
        emit(out, g.common.format, &text, &records)?;
    } else {
        let res = classify(ty, &provider)?;
        let records: Vec<Vec<String>> = res
            .entries
            .iter()
            .map(|(l, s)| vec!["classify".into(), ty.to_string(), l.to_string(), s.to_string()])
            .collect();
        emit(out, g.common.format, &res.to_string(), &records)?;
    }
    Ok(0)
}

fn cmd_decompose(g: &GroupArgs, rep: &str, wedge: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let ty = g.cartan_type()?;
    let t = g.common.provider().table(ty)?;
    let i = t.find(rep)?;
    let (f, factor, what) = match wedge {
        Some(l) => {
            let w = wedge_class_function(&t, l)?;
            let c = binomial(t.group().rank(), l);
            (t.class_function(i).product(&w), c, format!("wedge^{l}(h)"))
        }
        None => (t.class_function(i).product(&wedge_total(&t)), 1u64 << t.group().rank(), "wedge(h)".to_string()),
    };
    let d = tensor_decompose(&t, &f)?;
    let dim = t.irrep(i).dim() as u64;
    let total: u64 = d.iter().map(|&(j, m)| m * t.irrep(j).dim() as u64).sum();
    let label = t.label(i).to_string();
    let width = d.iter().map(|&(j, _)| t.label(j).to_string().chars().count()).max().unwrap_or(0);
    let mut text = format!("{ty}: {label} (x) {what}\n");
    let mut records = Vec::new();
    for &(j, m) in &d {
        let l = t.label(j).to_string();
        let pad = width - l.chars().count();
        text += &format!("  {m:>3} x {l}{}  dim {}\n", " ".repeat(pad), t.irrep(j).dim());
        records.push(vec!["term".into(), l, m.to_string(), t.irrep(j).dim().to_string()]);
    }
    let ok = total == dim * factor;
    text += &format!("  sum mult*dim = {total} = {dim}*{factor}{}\n", if ok { "" } else { "  MISMATCH" });
    records.push(vec!["total".into(), total.to_string(), (dim * factor).to_string()]);
    emit(out, g.common.format, &text, &records)?;
    Ok(if ok { 0 } else { 1 })
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

fn cmd_cells(g: &GroupArgs, out: &mut dyn Write) -> Result<i32> {
    let ty = g.cartan_type()?;
    let p = g.point()?.unwrap_or_else(|| ProjPoint::ratio(int(1)));
    let r = cm_cell_report(ty, &g.common.provider(), &p)?;
    if r.family.is_empty() {
        let text = format!("{ty}: no cuspidal family\n");
        emit(out, g.common.format, &text, &[vec!["cells".into(), ty.to_string(), "no-cuspidal-family".into()]])?;
        return Ok(0);
    }
    let mut records = Vec::new();
    for (set, name) in [(&r.lower, "lower"), (&r.upper, "upper"), (&r.family, "family")] {
        for l in set {
            records.push(vec!["cells".into(), ty.to_string(), name.into(), l.to_string()]);
        }
    }
    records.push(vec!["verdict".into(), ty.to_string(), r.verdict.to_string()]);
    emit(out, g.common.format, &r.to_string(), &records)?;
    Ok(0)
}

fn cmd_table(g: &GroupArgs, out: &mut dyn Write) -> Result<i32> {
    let t = g.common.provider().table(g.cartan_type()?)?;
    emit(out, g.common.format, &render_table(&t), &table_records(&t))?;
    Ok(0)
}

fn table_records(t: &CharacterTable) -> Vec<Vec<String>> {
    let mut records = Vec::new();
    for c in t.classes() {
        records.push(vec!["class".into(), c.name.clone(), c.size.to_string()]);
    }
    for ir in t.irreps() {
        let mut r = vec!["irrep".into(), ir.label.to_string()];
        r.extend(ir.values.iter().map(|v| v.to_string()));
        records.push(r);
    }
    records
}

/// Aligned text: one header row of class names, one row per irrep.
pub fn render_table(t: &CharacterTable) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut head = vec![String::new()];
    head.extend(t.classes().iter().map(|c| c.name.clone()));
    rows.push(head);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(t.classes().iter().map(|c| c.size.to_string()));
    rows.push(sizes);
    for ir in t.irreps() {
        let mut r = vec![ir.label.to_string()];
        r.extend(ir.values.iter().map(|v| v.to_string()));
        rows.push(r);
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut s = format!("{} ({} classes, order {})\n", t.cartan_type(), t.num_classes(), t.order());
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, v)| {
                let pad = " ".repeat(widths[c] - v.chars().count());
                if c == 0 {
                    format!("{v}{pad}")
                } else {
                    format!("{pad}{v}")
                }
            })
            .collect();
        s += cells.join(" ").trim_end();
        s.push('\n');
    }
    s
}

fn cmd_verify(common: &CommonArgs, only: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let report = verify_all(&common.provider(), only)?;
    let mut text = report.to_string();
    for &(name, n, what) in GROUPS {
        if let Some(s) = report.criterion_status(n) {
            text += &format!("criterion {n:>2} {name:<18} {s}  {what}\n");
        }
    }
    let records: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            vec![
                "check".into(),
                c.criterion.to_string(),
                c.id.clone(),
                c.status.to_string(),
                c.expected.clone(),
                c.computed.clone(),
            ]
        })
        .collect();
    emit(out, common.format, &text, &records)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_check_data(common: &CommonArgs, out: &mut dyn Write) -> Result<i32> {
    let dir = common.data_dir.clone().unwrap_or_else(crate::chars::default_data_dir);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "tbl"))
        .collect();
    files.sort();
    let mut text = String::new();
    let mut records = Vec::new();
    let mut failed = false;
    for f in &files {
        let name = f.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let (status, detail) = match load_table(f) {
            Ok(t) => (Status::Pass, format!("{}, {} classes, orthogonal", t.cartan_type(), t.num_classes())),
            Err(e) => {
                failed = true;
                (Status::Fail, e.to_string())
            }
        };
        text += &format!("{status} {name}: {detail}\n");
        records.push(vec!["data".into(), name, status.to_string(), detail]);
    }
    if files.is_empty() {
        text += &format!("no table files in {}\n", dir.display());
    }
    emit(out, common.format, &text, &records)?;
    Ok(if failed { 1 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("cherednik").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = run(&cli.command, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn points_parse() {
        assert_eq!(parse_point("2/3").unwrap(), ProjPoint::ratio(crate::algebra::rat(2, 3)));
        assert_eq!(parse_point("-i").unwrap(), ProjPoint::Ratio(Surd::imaginary_unit(-1)));
        assert!(parse_point("x").is_err());
    }

    #[test]
    fn classify_b6_equal() {
        let (code, s) = run_args(&["classify", "--type", "B", "--rank", "6", "--equal"]);
        assert_eq!(code, 0);
        assert_eq!(s, "B6 at cs/cl=1: (2,2,2)x(0), (0)x(3,3)\n");
    }

    #[test]
    fn decompose_identity_and_records() {
        let (code, s) = run_args(&["decompose", "--type", "G2", "--rep", "trivial", "--wedge", "0"]);
        assert_eq!(code, 0);
        assert!(s.contains("1 x φ{1,0}"), "{s}");
        let (_, r) = run_args(&["decompose", "--type", "G2", "--rep", "φ{2,2}", "--format", "records"]);
        assert_eq!(r.lines().filter(|l| l.starts_with("term")).count(), 4);
        assert!(r.ends_with("total\t8\t8\n"));
    }

    #[test]
    fn cells_a4_has_no_family() {
        let (_, s) = run_args(&["cells", "--type", "A4"]);
        assert_eq!(s, "A4: no cuspidal family\n");
    }

    #[test]
    fn only_commutator_counts() {
        let (code, s) = run_args(&["verify-paper", "--only", "commutator-counts", "--format", "records"]);
        assert_eq!(code, 0);
        assert_eq!(s.lines().count(), 10);
        assert!(s.lines().all(|l| l.split('\t').nth(3) == Some("PASS")));
    }

    #[test]
    fn bad_type_is_an_error() {
        let cli = Cli::try_parse_from(["cherednik", "classify", "--type", "H3"]).unwrap();
        assert!(run(&cli.command, &mut Vec::new()).is_err());
    }
}
