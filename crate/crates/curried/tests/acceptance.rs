use curried::acceptance::run_all;

fn main() {
    let seed = std::env::var("CURRIED_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    println!("acceptance battery (seed {seed})");
    let outcomes = run_all(seed);
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
