// Runs every reproduction criterion and prints one line per criterion.
// Exits nonzero when any criterion fails.

#include "xorban/error.hpp"
#include "xorban/reproduce.hpp"

#include <cstdio>
#include <exception>

int main()
{
    const xorban::ReproduceOptions options;
    int failed = 0;
    for ( const auto& id : xorban::criterion_ids() )
    {
        try
        {
            const auto r = xorban::run_criterion( id, options );
            std::printf( "%s  %-16s measured: %s | expected: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                         r.measured.c_str(), r.expected.c_str(), r.seconds );
            failed += r.pass ? 0 : 1;
        }
        catch ( const std::exception& e )
        {
            std::printf( "FAIL  %-16s threw: %s\n", id.c_str(), e.what() );
            ++failed;
        }
    }
    std::printf( "%zu/%zu criteria passed\n", xorban::criterion_ids().size() - failed, xorban::criterion_ids().size() );
    return failed == 0 ? 0 : 1;
}
