#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "hyperring/multiring.hpp"

int main(int argc, char** argv) {
    // Every construction re-runs the axiom check on its output.
    hyperring::set_revalidate_constructions(true);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
