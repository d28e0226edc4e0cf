use clap::{Parser, Subcommand, ValueEnum};
use coset_growth::oracle::DEFAULT_BUDGET;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "cosetgrowth", version, about = "Product growth, coset measures and product-free sets in groups")]
pub struct Cli {
    /// Extra group catalog files (name / degree / gens records).
    #[arg(long, global = true)]
    pub catalog: Vec<PathBuf>,
    /// Quotient registry for `measure`.
    #[arg(long, global = true)]
    pub quotients: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Candidate evaluations allowed for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest catalog order for `group list` and `verify`.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Catalog groups and their invariants.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Measurable sets over a finitely generated group.
    Measure {
        /// `z`, `f2`, or comma-separated generator names.
        #[arg(long, default_value = "z")]
        source: String,
        #[command(subcommand)]
        op: MeasureCmd,
    },
    /// Sizes of A, A², A³, ... until they stabilize.
    Grow {
        group: String,
        set: String,
        /// Number of powers to form (default 2|G|).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Ruzsa distances of two subsets.
    Ruzsa { group: String, a: String, b: String },
    /// Minimum product-set size for given sizes.
    Mu {
        group: String,
        r: usize,
        s: usize,
        /// Also run the exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Explicit sets from the constructions.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// Group name, or the rank for `hypercube`.
        target: String,
        /// Re-check every postcondition.
        #[arg(long)]
        verify: bool,
    },
    /// Product-free sets.
    #[command(subcommand)]
    Productfree(ProductFreeCmd),
    /// Subgroup lattice as a weighted graph.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Exhaustive predicate sweeps: `all`, `list`, or a predicate id.
    Verify { target: String, group: Option<String> },
    /// Worked demonstrations.
    #[command(subcommand)]
    Demo(DemoCmd),
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    Info { group: String },
    List,
    /// Element names by index.
    Elements { group: String },
    /// Full Cayley table of indices.
    Table { group: String },
}

#[derive(Subcommand, Debug)]
pub enum MeasureCmd {
    Of { set: String },
    Square { set: String },
    Product { a: String, b: String },
    Union { a: String, b: String },
    Intersect { a: String, b: String },
    Complement { set: String },
    Charts,
    /// Best product-free density over the registered charts.
    Alpha,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    HalfEven,
    HalfOdd,
    ExactOdd,
    SevenQuarters,
    Hypercube,
    Pullback,
}

#[derive(Subcommand, Debug)]
pub enum ProductFreeCmd {
    Max { group: String },
    Check { group: String, set: String },
    /// Pull a product-free set of `G/N` back to `G`.
    Pullback {
        group: String,
        /// Normal subgroup `N` as an element list.
        normal: String,
        /// Subset of the quotient; cosets are named `[rep]`.
        set: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    Graph { group: String },
    Geodesic { group: String, a: usize, b: usize },
    Action { group: String },
}

#[derive(Subcommand, Debug)]
pub enum DemoCmd {
    /// A measure-1/2 subset of the integers whose square is not everything.
    Zhalf {
        /// Size of the cyclic chart (even).
        #[arg(long, default_value_t = 4)]
        chart: usize,
    },
}
