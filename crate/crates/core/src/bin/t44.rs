fn main() {
    let o = t44::cli::run(std::env::args_os(), t44::cli::read_stdin);
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    std::process::exit(o.code);
}
