use super::{parse_angle, Cell, CliError, Report};
use crate::cavity::{self, CavityParams};
use crate::geophase::{
    bargmann::gp_discrete, dephasing_trajectory, gp_curve, gp_mixed_nonunitary, gp_mixed_unitary, precession_gp_closed,
    precession_gp_interferometric, precession_path, qubit_from_bloch, tong_dephasing_exact, tong_dephasing_first_order,
    uhlmann_phase_numeric, uhlmann_phase_qubit, weak::bloch_projector, PureCurve, strackee_solid_angle, weak_value,
};
use crate::stargeo::{
    coherent_state, default_g, degenerate_endpoints, geodesic, geodesic_decompose, npc_check, null_phase_curve,
    state_to_stars,
};
use crate::topo::{
    chern_fhs, edge_bands_2d, edge_spectrum_1d, ssh_reference, ssh_winding, two_domain_ssqw, winding_momentum,
    winding_realspace,
};
use crate::walks::{
    band_grid, gamma_critical, k_grid, pt_check, Coin4, Stepper, StateVector, WalkSpec,
};
use crate::C64;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::path::PathBuf;

type Res = Result<Report, CliError>;

fn angle(s: &str) -> Result<f64, String> {
    parse_angle(s)
}

fn linspace(a: f64, b: Option<f64>, points: usize) -> Result<Vec<f64>, CliError> {
    if points == 0 {
        return Err(CliError::Schema("--points must be at least 1".into()));
    }
    match (b, points) {
        (_, 1) => Ok(vec![a]),
        (None, _) => Err(CliError::Schema("a sweep with --points > 1 needs its end value".into())),
        (Some(b), n) => Ok((0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()),
    }
}

#[derive(Parser, Debug)]
#[command(name = "qwgeo", version, about = "Quantum walks, topological invariants and geometric phases")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Common {
    /// CSV output path; a <stem>.manifest.json is written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: $QWGEO_WORKERS, else all cores).
    #[arg(long)]
    pub workers: Option<usize>,
    /// JSON config with flag names as keys; command-line flags override it.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Real-space evolution: norm, mean and variance per step.
    Walk(WalkArgs),
    /// Quasi-energy bands and Bloch vectors on the Brillouin-zone grid.
    Bands(BandsArgs),
    /// Momentum-space winding number of the split-step walk (optionally swept in γ).
    Winding(WindingArgs),
    /// Chern number of the 2D walk (optionally swept in γ_x).
    Chern(ChernArgs),
    /// Winding number from the monitored mean displacement, swept in θ₁.
    RealspaceWinding(RealspaceArgs),
    /// Spectrum and localization of the two-domain split-step chain.
    Edge1d(Edge1dArgs),
    /// Quasi-1D bands of the 2D walk with a domain wall along y.
    Edge2d(Edge2dArgs),
    /// SSH chain spectrum, zero modes and winding.
    Ssh(SshArgs),
    /// Critical gain/loss γ_c of the split-step walk.
    GammaC(GammaCArgs),
    /// PT-symmetry check of the momentum blocks.
    PtCheck(PtArgs),
    /// Majorana-star decomposition of the geodesic between degenerate-star states.
    Geodesic(GeodesicArgs),
    /// Majorana stars of a symmetric state.
    Stars(StarsArgs),
    /// Null phase curve and its third-order Bargmann check.
    Npc(NpcArgs),
    /// Geometric phase of a sampled pure-state curve.
    Gp(GpArgs),
    /// Mixed-state geometric phase (unitary precession or dephasing).
    GpMixed(GpMixedArgs),
    /// Uhlmann phase of a qubit, closed form vs direct evaluation.
    Uhlmann(UhlmannArgs),
    /// Weak value of a projector and the three-vertex geometric phase.
    Weakvalue(WeakArgs),
    /// Rotating atom in a cavity: rates and geometric-phase split.
    Cavity(CavityArgs),
}

macro_rules! dispatch {
    ($self:ident, $a:ident => $e:expr) => {
        match $self {
            Cmd::Walk($a) => $e,
            Cmd::Bands($a) => $e,
            Cmd::Winding($a) => $e,
            Cmd::Chern($a) => $e,
            Cmd::RealspaceWinding($a) => $e,
            Cmd::Edge1d($a) => $e,
            Cmd::Edge2d($a) => $e,
            Cmd::Ssh($a) => $e,
            Cmd::GammaC($a) => $e,
            Cmd::PtCheck($a) => $e,
            Cmd::Geodesic($a) => $e,
            Cmd::Stars($a) => $e,
            Cmd::Npc($a) => $e,
            Cmd::Gp($a) => $e,
            Cmd::GpMixed($a) => $e,
            Cmd::Uhlmann($a) => $e,
            Cmd::Weakvalue($a) => $e,
            Cmd::Cavity($a) => $e,
        }
    };
}

impl Cmd {
    pub fn common(&self) -> &Common {
        dispatch!(self, a => &a.common)
    }

    pub fn inputs(&self) -> Value {
        dispatch!(self, a => serde_json::to_value(a).expect("arguments serialize"))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Cmd::Walk(_) => "walk",
            Cmd::Bands(_) => "bands",
            Cmd::Winding(_) => "winding",
            Cmd::Chern(_) => "chern",
            Cmd::RealspaceWinding(_) => "realspace-winding",
            Cmd::Edge1d(_) => "edge1d",
            Cmd::Edge2d(_) => "edge2d",
            Cmd::Ssh(_) => "ssh",
            Cmd::GammaC(_) => "gamma-c",
            Cmd::PtCheck(_) => "pt-check",
            Cmd::Geodesic(_) => "geodesic",
            Cmd::Stars(_) => "stars",
            Cmd::Npc(_) => "npc",
            Cmd::Gp(_) => "gp",
            Cmd::GpMixed(_) => "gp-mixed",
            Cmd::Uhlmann(_) => "uhlmann",
            Cmd::Weakvalue(_) => "weakvalue",
            Cmd::Cavity(_) => "cavity",
        }
    }

    pub fn execute(&self) -> Res {
        dispatch!(self, a => a.run())
    }
}

// ---------------------------------------------------------------- walks

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantArg {
    Dtqw1d,
    Ssqw1d,
    Electric1d,
    Dtqw2d,
    Coin4d,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoinArg {
    Hadamard,
    Grover,
    Fourier,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct WalkParams {
    #[arg(long, value_enum, default_value = "dtqw1d")]
    pub variant: VariantArg,
    /// Sites along x (1D: chain length).
    #[arg(long, default_value_t = 201)]
    pub n: usize,
    /// Sites along y (2D; defaults to n).
    #[arg(long)]
    pub ny: Option<usize>,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "pi/2")]
    pub theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "0")]
    pub theta2: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma_x: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma_y: f64,
    /// Electric phase per site.
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "0")]
    pub phi: f64,
    /// Phase-operator exponent of the split-step walk.
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "0")]
    pub phase_op: f64,
    #[arg(long, value_enum, default_value = "hadamard")]
    pub coin4: CoinArg,
}

impl WalkParams {
    pub fn spec(&self) -> WalkSpec {
        let ny = self.ny.unwrap_or(self.n);
        let mut s = match self.variant {
            VariantArg::Dtqw1d => WalkSpec::dtqw1d(self.n, self.theta1),
            VariantArg::Ssqw1d => WalkSpec::ssqw1d(self.n, self.theta1, self.theta2, self.gamma),
            VariantArg::Electric1d => WalkSpec::electric1d(self.n, self.theta1, self.phi),
            VariantArg::Dtqw2d => WalkSpec::dtqw2d(self.n, ny, self.theta1, self.theta2, self.gamma_x, self.gamma_y),
            VariantArg::Coin4d => WalkSpec::coin4d(
                self.n,
                ny,
                match self.coin4 {
                    CoinArg::Hadamard => Coin4::Hadamard,
                    CoinArg::Grover => Coin4::Grover,
                    CoinArg::Fourier => Coin4::Fourier,
                },
            ),
        };
        s.phase_op = self.phase_op;
        s
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InitialCoin {
    /// (1, i)/√2, or its two-fold tensor power for four-state coins.
    Sym,
    Up,
    Down,
    /// (1, −1, −1, 1)/2 (four-state coins only).
    Grover,
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct WalkArgs {
    #[command(flatten)]
    pub walk: WalkParams,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long, value_enum, default_value = "sym")]
    pub initial: InitialCoin,
    /// Write the final site distribution instead of per-step statistics.
    #[arg(long)]
    pub dist: bool,
    #[command(flatten)]
    pub common: Common,
}

fn stats(p: &[f64], pos: &[f64]) -> (f64, f64) {
    let m: f64 = p.iter().zip(pos).map(|(a, x)| a * x).sum();
    let m2: f64 = p.iter().zip(pos).map(|(a, x)| a * x * x).sum();
    (m, m2 - m * m)
}

impl WalkArgs {
    fn run(&self) -> Res {
        let spec = self.walk.spec();
        let d = spec.coin_dim();
        let h = C64::new(0.5, 0.0);
        let coin: Vec<C64> = match (self.initial, d) {
            (InitialCoin::Sym, 2) => vec![C64::new(FRAC_1_SQRT_2, 0.0), C64::new(0.0, FRAC_1_SQRT_2)],
            (InitialCoin::Sym, _) => vec![h, h * C64::i(), h * C64::i(), -h],
            (InitialCoin::Up, _) => (0..d).map(|i| C64::new(if i == 0 { 1.0 } else { 0.0 }, 0.0)).collect(),
            (InitialCoin::Down, _) => (0..d).map(|i| C64::new(if i == d - 1 { 1.0 } else { 0.0 }, 0.0)).collect(),
            (InitialCoin::Grover, 4) => vec![h, -h, -h, h],
            (InitialCoin::Grover, _) => return Err(CliError::Schema("grover initial coin needs a four-state walk".into())),
        };
        let stepper = Stepper::new(&spec)?;
        let mut state = StateVector::localized(&spec, &coin)?;
        let xs: Vec<f64> = state.positions();
        let ys: Vec<f64> = (0..state.ny).map(|i| crate::walks::position(i, state.ny) as f64).collect();
        let two_d = spec.is_2d();
        let mut rep = if two_d {
            Report::new(&["t [steps]", "norm [1]", "mean_x [sites]", "var_x [sites^2]", "mean_y [sites]", "var_y [sites^2]"])
        } else {
            Report::new(&["t [steps]", "norm [1]", "mean_x [sites]", "var_x [sites^2]"])
        };
        let mut scratch = Vec::new();
        let record = |t: usize, st: &StateVector, rep: &mut Report| -> Result<(), CliError> {
            let norm = st.norm_sqr();
            if !norm.is_finite() || norm == 0.0 {
                return Err(CliError::Numerical(format!("norm {} at step {}", norm, t)));
            }
            let (mx, my) = st.marginals();
            let (a, b) = stats(&mx, &xs);
            let mut row: Vec<Cell> = vec![t.into(), norm.into(), a.into(), b.into()];
            if two_d {
                let (c, e) = stats(&my, &ys);
                row.extend([c.into(), e.into()]);
            }
            rep.row(row);
            Ok(())
        };
        record(0, &state, &mut rep)?;
        for t in 1..=self.steps {
            stepper.apply(&mut state.amps, &mut scratch);
            record(t, &state, &mut rep)?;
        }
        let last = rep.rows.last().cloned().unwrap_or_default();
        rep.note("final_norm", last[1].clone());
        rep.note("final_var_x", last[3].clone());
        if self.dist {
            let mut d = Report::new(&["x [sites]", "y [sites]", "probability [1]"]);
            let p = state.distribution();
            for (c, v) in p.iter().enumerate() {
                let (ix, iy) = (c % state.nx, c / state.nx);
                d.row(vec![(xs[ix] as i64).into(), (ys[iy] as i64).into(), (*v).into()]);
            }
            d.summary = rep.summary;
            return Ok(d);
        }
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct BandsArgs {
    #[command(flatten)]
    pub walk: WalkParams,
    /// Points per axis of the Brillouin-zone grid.
    #[arg(long, default_value_t = 201)]
    pub kcount: usize,
    #[command(flatten)]
    pub common: Common,
}

impl BandsArgs {
    fn run(&self) -> Res {
        let grid = band_grid(&self.walk.spec(), self.kcount)?;
        let mut rep = Report::new(&[
            "kx [rad]",
            "ky [rad]",
            "re_E [rad]",
            "im_E [rad]",
            "n_x [1]",
            "n_y [1]",
            "n_z [1]",
            "closed_vs_numeric [rad]",
        ]);
        for p in &grid.points {
            rep.row(vec![
                p.k[0].into(),
                p.k[1].into(),
                p.energy.re.into(),
                p.energy.im.into(),
                p.n[0].re.into(),
                p.n[1].re.into(),
                p.n[2].re.into(),
                p.closed_vs_numeric().into(),
            ]);
        }
        rep.note("points", grid.points.len());
        rep.note("max_closed_vs_numeric", grid.max_closed_vs_numeric());
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct PtArgs {
    #[command(flatten)]
    pub walk: WalkParams,
    #[arg(long, default_value_t = 101)]
    pub kcount: usize,
    #[command(flatten)]
    pub common: Common,
}

impl PtArgs {
    fn run(&self) -> Res {
        let spec = self.walk.spec();
        let r = pt_check(&spec, self.kcount)?;
        let mut rep = Report::new(&["kx [rad]", "ky [rad]", "pt_symmetric [bool]"]);
        for (k, ok) in k_grid(&spec, self.kcount).iter().zip(&r.per_k) {
            rep.row(vec![k[0].into(), k[1].into(), (*ok).into()]);
        }
        rep.note("all", r.all);
        rep.note("max_deviation", r.max_deviation);
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct GammaCArgs {
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta2: f64,
    #[command(flatten)]
    pub common: Common,
}

impl GammaCArgs {
    fn run(&self) -> Res {
        let g = gamma_critical(self.theta1, self.theta2)?;
        let mut rep =
            Report::new(&["theta1 [rad]", "theta2 [rad]", "gamma_c_re [1]", "gamma_c_im [1]", "argument [1]", "is_real [bool]"]);
        rep.row(vec![
            self.theta1.into(),
            self.theta2.into(),
            g.value.re.into(),
            g.value.im.into(),
            g.argument.into(),
            g.is_real.into(),
        ]);
        rep.note("gamma_c", g.value.re);
        Ok(rep)
    }
}

// ---------------------------------------------------------------- topology

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct WindingArgs {
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta2: f64,
    /// Gain/loss γ (start of the sweep).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_to: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub points: usize,
    #[arg(long, default_value_t = 2001)]
    pub kcount: usize,
    #[command(flatten)]
    pub common: Common,
}

impl WindingArgs {
    fn run(&self) -> Res {
        let gammas = linspace(self.gamma, self.gamma_to, self.points)?;
        let mut rep = Report::new(&[
            "theta1 [rad]",
            "theta2 [rad]",
            "gamma [1]",
            "winding [1]",
            "winding_dvector [1]",
            "distance_to_integer [1]",
            "status",
        ]);
        for &g in &gammas {
            let spec = WalkSpec::ssqw1d(4, self.theta1, self.theta2, g);
            match winding_momentum(&spec, self.kcount) {
                Ok(w) => rep.row(vec![
                    self.theta1.into(),
                    self.theta2.into(),
                    g.into(),
                    w.value.into(),
                    w.dvector.unwrap_or(f64::NAN).into(),
                    w.distance_to_integer().into(),
                    "ok".into(),
                ]),
                Err(e) if gammas.len() > 1 && !e.is_input_error() => rep.row(vec![
                    self.theta1.into(),
                    self.theta2.into(),
                    g.into(),
                    f64::NAN.into(),
                    f64::NAN.into(),
                    f64::NAN.into(),
                    "degenerate".into(),
                ]),
                Err(e) => return Err(e.into()),
            }
        }
        if let Ok(gc) = gamma_critical(self.theta1, self.theta2) {
            rep.note("gamma_c", gc.value.re);
        }
        if let [row] = rep.rows.as_slice() {
            rep.note("winding", row[3].clone());
        }
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct ChernArgs {
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta2: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma_x: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_x_to: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub points: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma_y: f64,
    /// Grid points per axis.
    #[arg(long, default_value_t = 48)]
    pub grid: usize,
    #[command(flatten)]
    pub common: Common,
}

impl ChernArgs {
    fn run(&self) -> Res {
        let gxs = linspace(self.gamma_x, self.gamma_x_to, self.points)?;
        let mut rep = Report::new(&[
            "theta1 [rad]",
            "theta2 [rad]",
            "gamma_x [1]",
            "gamma_y [1]",
            "grid [points]",
            "chern [1]",
            "raw [1]",
            "status",
        ]);
        for &gx in &gxs {
            let spec = WalkSpec::dtqw2d(4, 4, self.theta1, self.theta2, gx, self.gamma_y);
            let head: Vec<Cell> =
                vec![self.theta1.into(), self.theta2.into(), gx.into(), self.gamma_y.into(), self.grid.into()];
            match chern_fhs(&spec, self.grid) {
                Ok(c) => rep.row([head, vec![c.value.into(), c.raw.into(), "ok".into()]].concat()),
                Err(e) if gxs.len() > 1 && !e.is_input_error() => {
                    rep.row([head, vec![Cell::S("nan".into()), f64::NAN.into(), "gapless".into()]].concat())
                }
                Err(e) => return Err(e.into()),
            }
        }
        if let [row] = rep.rows.as_slice() {
            rep.note("chern", row[5].clone());
        }
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct RealspaceArgs {
    /// θ₁ (start of the sweep).
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta1_to: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub points: usize,
    #[arg(long, value_parser = angle, allow_hyphen_values = true)]
    pub theta2: f64,
    /// Detection probability per step.
    #[arg(long, default_value_t = 0.5)]
    pub pm: f64,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    /// k points for the momentum-space comparison.
    #[arg(long, default_value_t = 501)]
    pub kcount: usize,
    #[command(flatten)]
    pub common: Common,
}

impl RealspaceArgs {
    fn run(&self) -> Res {
        let t1s = linspace(self.theta1, self.theta1_to, self.points)?;
        let mut rep = Report::new(&[
            "theta1 [rad]",
            "theta2 [rad]",
            "winding_realspace [1]",
            "survival [1]",
            "winding_momentum [1]",
        ]);
        let rows: Result<Vec<Vec<Cell>>, CliError> = {
            use rayon::prelude::*;
            t1s.par_iter()
                .map(|&t1| {
                    let r = winding_realspace(t1, self.theta2, self.pm, self.steps)?;
                    let w = winding_momentum(&WalkSpec::ssqw1d(4, t1, self.theta2, 0.0), self.kcount)
                        .map(|w| w.value)
                        .unwrap_or(f64::NAN);
                    Ok(vec![t1.into(), self.theta2.into(), r.value.into(), r.survival.into(), w.into()])
                })
                .collect()
        };
        rep.rows = rows?;
        if let [row] = rep.rows.as_slice() {
            rep.note("winding_realspace", row[2].clone());
        }
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct Edge1dArgs {
    #[arg(long, default_value_t = 201)]
    pub n: usize,
    /// Sites with |x| ≤ wall belong to the inner domain.
    #[arg(long, default_value_t = 50)]
    pub wall: i64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "-3pi/8")]
    pub inner_theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "5pi/8")]
    pub inner_theta2: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "-3pi/8")]
    pub outer_theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "pi/4")]
    pub outer_theta2: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma: f64,
    #[command(flatten)]
    pub common: Common,
}

impl Edge1dArgs {
    fn run(&self) -> Res {
        let spec = two_domain_ssqw(
            self.n,
            self.wall,
            (self.inner_theta1, self.inner_theta2),
            (self.outer_theta1, self.outer_theta2),
            self.gamma,
        );
        let e = edge_spectrum_1d(&spec, self.wall)?;
        let mut rep = Report::new(&[
            "index",
            "re_lambda [1]",
            "im_lambda [1]",
            "modulus [1]",
            "arg [rad]",
            "ipr [1]",
            "wall_weight [1]",
            "midgap [bool]",
            "localized [bool]",
        ]);
        for (i, l) in e.eigenvalues.iter().enumerate() {
            let loc = e.localization[i];
            rep.row(vec![
                i.into(),
                l.re.into(),
                l.im.into(),
                l.norm().into(),
                l.arg().into(),
                loc.ipr.into(),
                loc.wall_weight.into(),
                e.midgap[i].into(),
                loc.localized().into(),
            ]);
        }
        rep.note("midgap", e.midgap_count());
        rep.note("edge_states", e.edge_states().len());
        rep.note("clean", e.is_clean());
        rep.note("max_modulus_defect", e.max_modulus_defect());
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct Edge2dArgs {
    #[arg(long, default_value_t = 81)]
    pub ny: usize,
    #[arg(long, default_value_t = 20)]
    pub wall: i64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "7pi/3")]
    pub inner_theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "7pi/3")]
    pub inner_theta2: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "2pi")]
    pub outer_theta1: f64,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "3pi")]
    pub outer_theta2: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma_x: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma_y: f64,
    #[arg(long, default_value_t = 16)]
    pub kcount: usize,
    #[command(flatten)]
    pub common: Common,
}

impl Edge2dArgs {
    fn run(&self) -> Res {
        let b = edge_bands_2d(
            self.ny,
            self.wall,
            (self.inner_theta1, self.inner_theta2),
            (self.outer_theta1, self.outer_theta2),
            self.gamma_x,
            self.gamma_y,
            self.kcount,
        )?;
        let mut rep =
            Report::new(&["kx [rad]", "band", "re_E [rad]", "im_E [rad]", "ipr [1]", "wall_weight [1]", "localized [bool]"]);
        for (j, k) in b.kx.iter().enumerate() {
            for (i, e) in b.energies[j].iter().enumerate() {
                let l = b.localization[j][i];
                rep.row(vec![
                    (*k).into(),
                    i.into(),
                    e.re.into(),
                    e.im.into(),
                    l.ipr.into(),
                    l.wall_weight.into(),
                    l.localized().into(),
                ]);
            }
        }
        rep.note("gap0", b.gap0);
        rep.note("gap_pi", b.gap_pi);
        rep.note("in_gap", b.in_gap);
        rep.note("localized_in_gap", b.localized_in_gap);
        rep.note("isolated", b.isolated());
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct SshArgs {
    /// Intra-cell hopping.
    #[arg(long, default_value_t = 0.5)]
    pub v: f64,
    /// Inter-cell hopping.
    #[arg(long, default_value_t = 1.0)]
    pub w: f64,
    #[arg(long, default_value_t = 100)]
    pub cells: usize,
    /// Close the chain into a ring.
    #[arg(long)]
    pub periodic: bool,
    #[arg(long, default_value_t = 2001)]
    pub kcount: usize,
    /// Zero-mode threshold on |E|.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Write the bulk dispersion instead of the finite-chain spectrum.
    #[arg(long)]
    pub dispersion: bool,
    #[command(flatten)]
    pub common: Common,
}

impl SshArgs {
    fn run(&self) -> Res {
        let r = ssh_reference(self.v, self.w, self.cells, !self.periodic, self.kcount)?;
        let mut rep = if self.dispersion {
            let mut rep = Report::new(&["k [rad]", "energy_upper [hopping]", "d_x [hopping]", "d_y [hopping]"]);
            for (i, k) in r.ks.iter().enumerate() {
                rep.row(vec![(*k).into(), r.dispersion[i].into(), r.dvector[i][0].into(), r.dvector[i][1].into()]);
            }
            rep
        } else {
            let mut rep = Report::new(&["index", "energy [hopping]"]);
            for (i, e) in r.spectrum.iter().enumerate() {
                rep.row(vec![i.into(), (*e).into()]);
            }
            rep
        };
        rep.note("near_zero", r.near_zero(self.tol));
        rep.note("zero_modes", r.zero_modes.len());
        for (i, m) in r.zero_modes.iter().enumerate() {
            rep.note(&format!("zero_mode_{}_weight_a", i), m.weight_a);
        }
        match ssh_winding(self.v, self.w, self.kcount) {
            Ok(w) => rep.note("winding", w.value),
            Err(_) => rep.note("winding", f64::NAN),
        }
        Ok(rep)
    }
}

// ---------------------------------------------------------------- state geometry

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct GeodesicArgs {
    /// Hilbert-space dimension (number of stars + 1).
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    /// Endpoint angle, cos θ = ⟨ψ₁|ψ₂⟩, in [0, π/2).
    #[arg(long, value_parser = angle, default_value = "pi/3")]
    pub theta: f64,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    #[command(flatten)]
    pub common: Common,
}

impl GeodesicArgs {
    fn run(&self) -> Res {
        let (p1, p2) = degenerate_endpoints(self.dim, self.theta)?;
        let dec = geodesic_decompose(&p1, &p2, self.samples)?;
        let gp = gp_curve(&geodesic(&p1, &p2, self.samples)?)?;
        let mut rep = Report::new(&["curve", "s [1]", "x [1]", "y [1]", "z [1]"]);
        for (c, curve) in dec.curves.iter().enumerate() {
            for (s, p) in curve.params.iter().zip(&curve.points) {
                rep.row(vec![c.into(), (*s).into(), p[0].into(), p[1].into(), p[2].into()]);
            }
        }
        rep.note("gp", gp);
        rep.note("max_circle_residual", dec.max_circle_residual());
        rep.note("reflection_residual", dec.reflection_residual);
        for (k, (c, r)) in dec.circles.iter().zip(&dec.radii_formula).enumerate() {
            if let Some(c) = c {
                rep.note(&format!("radius_{}", k), c.radius);
            }
            rep.note(&format!("radius_formula_{}", k), *r);
        }
        Ok(rep)
    }
}

/// Parses `re,im;re,im;...` (imaginary parts optional).
fn parse_state(s: &str) -> Result<Vec<C64>, CliError> {
    let bad = || CliError::Schema(format!("cannot read state \"{}\"; use re,im;re,im;...", s));
    s.split(';')
        .map(|c| {
            let parts: Vec<&str> = c.split(',').map(str::trim).collect();
            let num = |t: &str| t.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
            match parts.as_slice() {
                [re] => Ok(C64::new(num(re)?, 0.0)),
                [re, im] => Ok(C64::new(num(re)?, num(im)?)),
                _ => Err(bad()),
            }
        })
        .collect()
}

fn parse_vec3(s: &str) -> Result<[f64; 3], CliError> {
    let v: Vec<f64> = s.split(',').map(|t| t.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| {
        CliError::Schema(format!("cannot read vector \"{}\"; use x,y,z", s))
    })?;
    match v.as_slice() {
        [x, y, z] if x.is_finite() && y.is_finite() && z.is_finite() && (x * x + y * y + z * z) > 0.0 => Ok([*x, *y, *z]),
        _ => Err(CliError::Schema(format!("\"{}\" is not a nonzero 3-vector", s))),
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct StarsArgs {
    /// Dicke-basis amplitudes `re,im;re,im;...`.
    #[arg(long, conflicts_with = "coherent_theta")]
    pub state: Option<String>,
    /// Spin-coherent state at this polar angle (with --dim).
    #[arg(long, value_parser = angle)]
    pub coherent_theta: Option<f64>,
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "0")]
    pub coherent_phi: f64,
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    #[command(flatten)]
    pub common: Common,
}

impl StarsArgs {
    fn run(&self) -> Res {
        let psi = match (&self.state, self.coherent_theta) {
            (Some(s), _) => parse_state(s)?,
            (None, Some(t)) => {
                if self.dim < 2 {
                    return Err(CliError::Schema("--dim must be at least 2".into()));
                }
                coherent_state(C64::new((t / 2.0).cos(), 0.0), C64::from_polar((t / 2.0).sin(), self.coherent_phi), self.dim - 1)
            }
            (None, None) => return Err(CliError::Schema("give --state or --coherent-theta".into())),
        };
        let st = state_to_stars(&psi)?;
        let mut rep = Report::new(&["star", "x [1]", "y [1]", "z [1]"]);
        for (i, p) in st.bloch_points().iter().enumerate() {
            rep.row(vec![i.into(), p[0].into(), p[1].into(), p[2].into()]);
        }
        rep.note("stars", st.len());
        rep.note("at_infinity", st.at_infinity);
        rep.note("distinct", st.multiplicities.len());
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct NpcArgs {
    /// Parameter range [0, θ] of g(s) = cos[s(s−θ)].
    #[arg(long, value_parser = angle, default_value = "1")]
    pub theta: f64,
    /// Phase χ of the third component (χ-rotated family).
    #[arg(long, value_parser = angle, allow_hyphen_values = true, default_value = "0")]
    pub chi: f64,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    /// Maximum number of triples scanned.
    #[arg(long, default_value_t = 200_000)]
    pub budget: usize,
    #[command(flatten)]
    pub common: Common,
}

impl NpcArgs {
    fn run(&self) -> Res {
        let c = null_phase_curve(self.theta, self.chi, default_g(self.theta), self.samples)?;
        let r = npc_check(&c, self.budget)?;
        let gp = gp_curve(&c)?;
        let mut rep = Report::new(&["s [rad]", "re_1", "im_1", "re_2", "im_2", "re_3", "im_3"]);
        for (s, v) in c.params().iter().zip(c.states()) {
            rep.row(vec![
                (*s).into(),
                v[0].re.into(),
                v[0].im.into(),
                v[1].re.into(),
                v[1].im.into(),
                v[2].re.into(),
                v[2].im.into(),
            ]);
        }
        rep.note("is_npc", r.is_npc);
        rep.note("min_real", r.min_real);
        rep.note("max_abs_imag", r.max_abs_imag);
        rep.note("triples", r.triples);
        rep.note("gp", gp);
        Ok(rep)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    /// Geodesic between degenerate-star endpoints at angle θ.
    Geodesic,
    /// Closed qubit circle at colatitude θ.
    Circle,
    /// Null phase curve g(s) = cos[s(s−θ)] on [0, θ].
    Npc,
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct GpArgs {
    #[arg(long, value_enum, default_value = "geodesic")]
    pub curve: CurveKind,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, value_parser = angle, default_value = "pi/3")]
    pub theta: f64,
    #[arg(long, default_value_t = 401)]
    pub samples: usize,
    #[command(flatten)]
    pub common: Common,
}

impl GpArgs {
    fn run(&self) -> Res {
        let (gp, reference) = match self.curve {
            CurveKind::Geodesic => {
                let (a, b) = degenerate_endpoints(self.dim, self.theta)?;
                (gp_curve(&geodesic(&a, &b, self.samples)?)?, 0.0)
            }
            CurveKind::Circle => {
                if self.dim != 2 {
                    return Err(CliError::Schema("circle curves are qubit curves (--dim 2)".into()));
                }
                let t = self.theta;
                let c = PureCurve::from_fn(0.0, 2.0 * PI, self.samples, |p| {
                    qubit_from_bloch([t.sin() * p.cos(), t.sin() * p.sin(), t.cos()])
                })?;
                (gp_curve(&c)?, crate::geophase::principal(-PI * (1.0 - t.cos())))
            }
            CurveKind::Npc => {
                if self.dim != 3 {
                    return Err(CliError::Schema("the null phase curve family lives in --dim 3".into()));
                }
                (gp_curve(&null_phase_curve(self.theta, 0.0, default_g(self.theta), self.samples)?)?, 0.0)
            }
        };
        let mut rep = Report::new(&["dim", "theta [rad]", "gp [rad]", "reference [rad]"]);
        rep.row(vec![self.dim.into(), self.theta.into(), gp.into(), reference.into()]);
        rep.note("gp", gp);
        Ok(rep)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MixedMode {
    /// Unitary precession of a state of purity r.
    Precession,
    /// Precessing qubit with transverse dephasing at rate Λ = ratio·η.
    Dephasing,
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct GpMixedArgs {
    #[arg(long, value_enum, default_value = "precession")]
    pub mode: MixedMode,
    /// Bloch-vector length (precession).
    #[arg(long, default_value_t = 0.5)]
    pub r: f64,
    #[arg(long, value_parser = angle, default_value = "pi/3")]
    pub theta: f64,
    /// Λ/η (dephasing).
    #[arg(long, default_value_t = 0.01)]
    pub ratio: f64,
    #[arg(long, default_value_t = 2001)]
    pub samples: usize,
    #[command(flatten)]
    pub common: Common,
}

impl GpMixedArgs {
    fn run(&self) -> Res {
        let mut rep = Report::new(&["quantity", "phase [rad]"]);
        match self.mode {
            MixedMode::Precession => {
                let (rho0, times, us) = precession_path(self.r, self.theta, self.samples);
                let m = gp_mixed_unitary(&rho0, &times, &us)?;
                rep.row(vec!["path_functional".into(), m.phase.into()]);
                rep.row(vec!["interferometric".into(), precession_gp_interferometric(self.r, self.theta).into()]);
                rep.row(vec!["closed".into(), precession_gp_closed(self.r, self.theta).into()]);
                rep.note("gp", m.phase);
                rep.note("visibility", m.visibility);
            }
            MixedMode::Dephasing => {
                let traj = dephasing_trajectory(self.theta, 1.0, self.ratio, self.samples)?;
                let m = gp_mixed_nonunitary(&traj)?;
                rep.row(vec!["trajectory".into(), m.phase.into()]);
                rep.row(vec!["closed".into(), tong_dephasing_exact(self.theta, 1.0, self.ratio).into()]);
                rep.row(vec!["first_order".into(), tong_dephasing_first_order(self.theta, self.ratio).into()]);
                rep.note("gp", m.phase);
            }
        }
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct UhlmannArgs {
    #[arg(long, default_value_t = 0.5)]
    pub r: f64,
    /// Rotation axis (n_x, 0, n_z), normalized.
    #[arg(long, default_value_t = 0.6, allow_hyphen_values = true)]
    pub nx: f64,
    #[arg(long, default_value_t = 0.8, allow_hyphen_values = true)]
    pub nz: f64,
    #[arg(long, value_parser = angle, default_value = "2pi")]
    pub tau_max: f64,
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    #[command(flatten)]
    pub common: Common,
}

impl UhlmannArgs {
    fn run(&self) -> Res {
        let l = self.nx.hypot(self.nz);
        if !(l > 0.0) {
            return Err(CliError::Schema("axis must be nonzero".into()));
        }
        let n = [self.nx / l, 0.0, self.nz / l];
        let mut rep = Report::new(&["tau [rad]", "closed [rad]", "numeric [rad]", "at_pole [bool]"]);
        for tau in linspace(0.0, Some(self.tau_max), self.points)? {
            let c = uhlmann_phase_qubit(self.r, n, tau)?;
            let v = uhlmann_phase_numeric(self.r, n, tau)?;
            rep.row(vec![tau.into(), c.phase.into(), v.into(), c.at_pole.into()]);
        }
        Ok(rep)
    }
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct WeakArgs {
    /// Pre-selected state as a Bloch vector x,y,z.
    #[arg(long, default_value = "0,0,1", allow_hyphen_values = true)]
    pub pre: String,
    /// Projector direction x,y,z.
    #[arg(long, default_value = "1,0,0", allow_hyphen_values = true)]
    pub mid: String,
    /// Post-selected state x,y,z.
    #[arg(long, default_value = "0,1,0", allow_hyphen_values = true)]
    pub post: String,
    #[command(flatten)]
    pub common: Common,
}

impl WeakArgs {
    fn run(&self) -> Res {
        let (a, b, c) = (parse_vec3(&self.pre)?, parse_vec3(&self.mid)?, parse_vec3(&self.post)?);
        let unit = |v: [f64; 3]| {
            let l = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            [v[0] / l, v[1] / l, v[2] / l]
        };
        let (a, b, c) = (unit(a), unit(b), unit(c));
        let (pa, pc) = (qubit_from_bloch(a), qubit_from_bloch(c));
        let w = weak_value(&pa, &pc, &bloch_projector(b))?;
        let gp = gp_discrete(&[pa, qubit_from_bloch(b), pc])?;
        let omega = strackee_solid_angle(a, b, c);
        let mut rep = Report::new(&["re_weak [1]", "im_weak [1]", "arg_weak [rad]", "gp_triangle [rad]", "minus_half_solid_angle [rad]"]);
        rep.row(vec![w.re.into(), w.im.into(), w.arg().into(), gp.into(), (-omega / 2.0).into()]);
        rep.note("arg_weak", w.arg());
        rep.note("gp_triangle", gp);
        Ok(rep)
    }
}

// ---------------------------------------------------------------- cavity

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// ω = 5e9, Ω₀ = 1e7, V = 1e-7, R = 1e-6 (ω ≫ Ω̄₀).
    High,
    /// ω = 1e5, Ω₀ = 1e7, V = 1e-3, R = 1e-3 (ω ≪ Ω̄₀).
    Low,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tuning {
    /// ω_c = ω + Ω̄₀.
    Sideband,
    /// ω_c = Ω₀.
    Atom,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CavitySweep {
    None,
    OmegaC,
    N,
}

#[derive(Args, Debug, Clone, Serialize)]
#[command(args_override_self = true)]
pub struct CavityArgs {
    #[arg(long, value_enum, default_value = "high")]
    pub preset: Preset,
    /// Atomic gap Ω₀ [rad/s].
    #[arg(long)]
    pub omega0: Option<f64>,
    /// Rotation frequency ω [rad/s].
    #[arg(long)]
    pub omega: Option<f64>,
    /// Orbit radius [m].
    #[arg(long)]
    pub radius: Option<f64>,
    /// Cavity volume [m^3].
    #[arg(long)]
    pub volume: Option<f64>,
    #[arg(long)]
    pub q: Option<f64>,
    /// Cavity frequency [rad/s]; overrides --tune.
    #[arg(long)]
    pub omega_c: Option<f64>,
    #[arg(long, value_enum, default_value = "sideband")]
    pub tune: Tuning,
    /// Coupling η [rad^2/s]; default: chosen so that πA/Ω₀ equals --a-scale.
    #[arg(long)]
    pub eta: Option<f64>,
    /// Dipole moment [C m]; sets η = |d|²/(3πħε₀V).
    #[arg(long, conflicts_with = "eta")]
    pub dipole: Option<f64>,
    /// πA/Ω₀ per quasi-cycle (default 1e-16 high, 1e-21 low).
    #[arg(long)]
    pub a_scale: Option<f64>,
    #[arg(long, value_parser = angle, default_value = "pi/2")]
    pub theta: f64,
    /// Quasi-cycles (start of an n sweep).
    #[arg(long, default_value_t = 1e5)]
    pub n: f64,
    #[arg(long, value_enum, default_value = "none")]
    pub sweep: CavitySweep,
    /// End of the sweep (ω_c or n).
    #[arg(long)]
    pub to: Option<f64>,
    /// Start of an ω_c sweep (default: the tuned ω_c).
    #[arg(long)]
    pub from: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub points: usize,
    #[command(flatten)]
    pub common: Common,
}

impl CavityArgs {
    pub fn params(&self) -> Result<CavityParams, CliError> {
        let mut p = match self.preset {
            Preset::High => CavityParams::high_regime_reference(),
            Preset::Low => CavityParams::low_regime_reference(),
        };
        p.omega0 = self.omega0.unwrap_or(p.omega0);
        p.omega = self.omega.unwrap_or(p.omega);
        p.radius = self.radius.unwrap_or(p.radius);
        p.volume = self.volume.unwrap_or(p.volume);
        p.q = self.q.unwrap_or(p.q);
        p.theta = self.theta;
        p.n = self.n;
        p.omega_c = match (self.omega_c, self.tune) {
            (Some(w), _) => w,
            (None, Tuning::Sideband) => p.omega + p.omega0_bar(),
            (None, Tuning::Atom) => p.omega0,
        };
        p.eta = 1.0;
        p.validate()?;
        p.eta = match (self.eta, self.dipole) {
            (Some(e), _) => e,
            (None, Some(d)) => cavity::eta_from_dipole(d, p.volume)?,
            (None, None) => {
                let scale = self.a_scale.unwrap_or(match self.preset {
                    Preset::High => 1e-16,
                    Preset::Low => 1e-21,
                });
                cavity::eta_for_a_scale(&p, scale)?
            }
        };
        p.validate()?;
        Ok(p)
    }

    fn run(&self) -> Res {
        let p = self.params()?;
        let mut rep = Report::new(&[
            "omega_c [rad/s]",
            "gamma_down [1/s]",
            "gamma_up [1/s]",
            "A [1/s]",
            "B [1/s]",
            "phi_inertial [rad]",
            "phi_noninertial [rad]",
            "n [cycles]",
        ]);
        let rows = match self.sweep {
            CavitySweep::None => cavity::sweep_omega_c(&p, &[p.omega_c])?,
            CavitySweep::OmegaC => {
                let from = self.from.unwrap_or(p.omega_c);
                cavity::sweep_omega_c(&p, &linspace(from, self.to, self.points)?)?
            }
            CavitySweep::N => {
                let to = self.to.ok_or_else(|| CliError::Schema("--sweep n needs --to".into()))?;
                if !(p.n > 0.0 && to > 0.0) || self.points < 2 {
                    return Err(CliError::Schema("an n sweep needs positive ends and --points ≥ 2".into()));
                }
                let (l0, l1) = (p.n.ln(), to.ln());
                let mut out = Vec::new();
                for i in 0..self.points {
                    let n = (l0 + (l1 - l0) * i as f64 / (self.points - 1) as f64).exp();
                    out.extend(cavity::sweep_omega_c(&CavityParams { n, ..p }, &[p.omega_c])?);
                }
                out
            }
        };
        for r in &rows {
            rep.row(vec![
                r.omega_c.into(),
                r.gamma_down.into(),
                r.gamma_up.into(),
                r.a.into(),
                r.b.into(),
                r.phi_inertial.into(),
                r.phi_noninertial.into(),
                r.n.into(),
            ]);
        }
        let g = cavity::gp_regimes(&p)?;
        rep.note("eta", p.eta);
        rep.note("zeta", p.zeta());
        rep.note("unitary", g.unitary);
        rep.note("phi_inertial", g.inertial);
        rep.note("phi_noninertial", g.noninertial);
        rep.note("noninertial_over_inertial", g.noninertial / g.inertial);
        Ok(rep)
    }
}
