#include "wgqed_cli/dispatch.hpp"

int main(int argc, char **argv) { return wgqed::cli::dispatch(argc, argv); }
