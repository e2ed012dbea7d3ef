#include "waveray/io.hpp"

int main(int argc, char** argv) {
    return waveray::main_cli(argc, argv);
}
