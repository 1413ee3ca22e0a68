fn main() {
    // Die quietly on a closed pipe (`proxrem sweep ... | head`) instead of
    // panicking; Rust ignores SIGPIPE by default.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(proxrem::cli::run());
}
