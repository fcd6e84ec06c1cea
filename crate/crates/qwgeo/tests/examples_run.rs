#[allow(dead_code)]
mod bargmann_gp {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bargmann_gp.rs"));
}
#[allow(dead_code)]
mod cavity_gp {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cavity_gp.rs"));
}
#[allow(dead_code)]
mod chern_2d {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/chern_2d.rs"));
}
#[allow(dead_code)]
mod cli_recipe {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_recipe.rs"));
}
#[allow(dead_code)]
mod edge_bands_2d {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/edge_bands_2d.rs"));
}
#[allow(dead_code)]
mod edge_states_1d {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/edge_states_1d.rs"));
}
#[allow(dead_code)]
mod geodesic_stars {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/geodesic_stars.rs"));
}
#[allow(dead_code)]
mod majorana_stars {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/majorana_stars.rs"));
}
#[allow(dead_code)]
mod mixed_state_gp {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/mixed_state_gp.rs"));
}
#[allow(dead_code)]
mod null_phase_curve {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/null_phase_curve.rs"));
}
#[allow(dead_code)]
mod realspace_winding {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/realspace_winding.rs"));
}
#[allow(dead_code)]
mod ssh_chain {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ssh_chain.rs"));
}
#[allow(dead_code)]
mod ssqw_bands {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ssqw_bands.rs"));
}
#[allow(dead_code)]
mod walk_spread {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/walk_spread.rs"));
}
#[allow(dead_code)]
mod weak_value {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/weak_value.rs"));
}
#[allow(dead_code)]
mod winding_loss {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/winding_loss.rs"));
}

#[test]
fn bargmann_gp_runs() {
    bargmann_gp::run_example().expect("bargmann_gp");
}

#[test]
fn cavity_gp_runs() {
    cavity_gp::run_example().expect("cavity_gp");
}

#[test]
fn chern_2d_runs() {
    chern_2d::run_example().expect("chern_2d");
}

#[test]
fn cli_recipe_runs() {
    cli_recipe::run_example().expect("cli_recipe");
}

#[test]
fn edge_bands_2d_runs() {
    edge_bands_2d::run_example().expect("edge_bands_2d");
}

#[test]
fn edge_states_1d_runs() {
    edge_states_1d::run_example().expect("edge_states_1d");
}

#[test]
fn geodesic_stars_runs() {
    geodesic_stars::run_example().expect("geodesic_stars");
}

#[test]
fn majorana_stars_runs() {
    majorana_stars::run_example().expect("majorana_stars");
}

#[test]
fn mixed_state_gp_runs() {
    mixed_state_gp::run_example().expect("mixed_state_gp");
}

#[test]
fn null_phase_curve_runs() {
    null_phase_curve::run_example().expect("null_phase_curve");
}

#[test]
fn realspace_winding_runs() {
    realspace_winding::run_example().expect("realspace_winding");
}

#[test]
fn ssh_chain_runs() {
    ssh_chain::run_example().expect("ssh_chain");
}

#[test]
fn ssqw_bands_runs() {
    ssqw_bands::run_example().expect("ssqw_bands");
}

#[test]
fn walk_spread_runs() {
    walk_spread::run_example().expect("walk_spread");
}

#[test]
fn weak_value_runs() {
    weak_value::run_example().expect("weak_value");
}

#[test]
fn winding_loss_runs() {
    winding_loss::run_example().expect("winding_loss");
}
