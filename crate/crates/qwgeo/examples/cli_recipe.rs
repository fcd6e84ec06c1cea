// Driving the command-line front end in-process, with a JSON config and flag overrides.

use std::io::Write;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("qwgeo-cli-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let cfg = dir.join("winding.json");
    std::fs::File::create(&cfg)?
        .write_all(br#"{"command": "winding", "theta1": "-3pi/8", "theta2": "pi/8", "gamma": 0.0, "gamma_to": 0.3, "points": 4, "kcount": 501}"#)?;

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qwgeo::cli::run(["qwgeo", "--config", cfg.to_str().unwrap(), "--points", "3"], &mut out, &mut err);
    println!("exit code {}", code);
    print!("{}", String::from_utf8(out)?);

    let csv = dir.join("gc.csv");
    let mut out = Vec::new();
    let code = qwgeo::cli::run(["qwgeo", "gamma-c", "--theta1=-3pi/8", "--theta2=pi/4", "--out", csv.to_str().unwrap()], &mut out, &mut err);
    println!("exit code {}", code);
    print!("{}", String::from_utf8(out)?);

    let code = qwgeo::cli::run(["qwgeo", "ssh", "--cells=0"], &mut Vec::new(), &mut err);
    println!("empty chain: exit code {}", code);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
