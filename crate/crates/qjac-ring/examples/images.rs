use qjac_ring::{image_table, Generator};

fn main() {
    let t = image_table().expect("bootstrap");
    for g in Generator::ALL {
        println!("D_p {:>5} = {}", g.name(), t.dp[g as usize]);
        println!("D_tau {:>3} = {}", g.name(), t.dtau[g as usize]);
    }
    println!("G6 = {}", t.g6);
}
