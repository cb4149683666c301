#pragma once

// Printed coefficient tables, one row per form:
//   <table> <family> <space> <coefficients> : <entries in basis order>
// A row printed as "-" has no entries in the source table.

#include <string_view>

namespace qf48 {

inline constexpr std::string_view printed_tables_text = R"(
2 q1 chi0 1,1,1,4 : 0 0 5/8 0 -7/8 0 5/4 0 0 2 0 0 0 0
2 q1 chi0 1,1,4,4 : 1/24 0 0 0 -7/24 0 5/4 0 0 2 0 0 0 0
2 q1 chi0 1,1,3,12 : 1/12 1/6 -5/16 -5/12 7/16 55/48 -5/8 -23/16 47/24 1 3 0 2 1
2 q1 chi0 1,1,12,12 : 1/48 1/12 0 -5/48 7/48 0 -5/8 -23/48 47/24 1 3 1 2 1
2 q1 chi0 1,2,2,4 : 1/24 0 0 0 -7/24 0 5/4 0 0 0 0 0 0 0
2 q1 chi0 1,2,6,12 : 1/96 -1/24 0 5/96 -7/96 0 5/16 -23/96 47/48 0 0 1/2 1 1
2 q1 chi0 1,3,3,4 : 1/12 1/6 -5/16 -5/12 7/16 55/48 -5/8 -23/16 47/24 -1 -3 0 -2 1
2 q1 chi0 1,3,4,12 : 1/16 1/12 -5/16 -5/16 7/16 55/48 -5/8 -23/16 47/24 0 0 0 0 1
2 q1 chi0 1,4,4,4 : 1/16 0 -5/16 0 0 0 5/4 0 0 1 0 0 0 0
2 q1 chi0 1,4,6,6 : 1/48 1/12 0 -5/48 7/48 0 -5/8 -23/48 47/24 0 0 1 -2 0
2 q1 chi0 1,4,12,12 : 1/32 1/24 -5/32 -5/32 7/24 55/96 -5/8 -23/24 47/24 1/2 3/2 1/2 0 1/2
2 q1 chi0 2,2,3,12 : 1/48 1/12 0 -5/48 7/48 0 -5/8 -23/48 47/24 0 0 -1 2 0
2 q1 chi0 2,3,4,6 : 1/96 -1/24 0 5/96 -7/96 0 5/16 -23/96 47/48 0 0 1/2 1 -1
2 q1 chi0 3,3,4,4 : 1/48 1/12 0 -5/48 7/48 0 -5/8 -23/48 47/24 -1 -3 -1 -2 1
2 q1 chi0 3,4,4,12 : 1/32 1/24 -5/32 -5/32 7/24 55/96 -5/8 -23/24 47/24 -1/2 -3/2 -1/2 0 1/2
2 q1 chi8 1,1,2,4 : 0 -2 0 0 4 0 0 0 0 0 0 0
2 q1 chi8 1,1,6,12 : 0 -4/5 0 -6/5 8/5 0 -12/5 0 8/5 32/5 4/5 -8/5
2 q1 chi8 1,2,4,4 : 0 -2 0 0 2 0 0 0 0 0 0 0
2 q1 chi8 1,2,3,12 : 0 2/5 0 -12/5 4/5 0 24/5 0 4/5 24/5 2/5 -16/5
2 q1 chi8 1,2,12,12 : 0 2/5 0 -12/5 2/5 0 12/5 0 12/5 24/5 -4/5 -16/5
2 q1 chi8 1,3,4,6 : 0 -4/5 0 -6/5 8/5 0 -12/5 0 8/5 -8/5 -6/5 -8/5
2 q1 chi8 1,4,6,12 : 0 -4/5 0 -6/5 4/5 0 -6/5 0 4/5 12/5 2/5 -8/5
2 q1 chi8 2,3,3,4 : 0 2/5 0 -12/5 4/5 0 24/5 0 -16/5 -16/5 12/5 24/5
2 q1 chi8 2,3,4,12 : 0 2/5 0 -12/5 2/5 0 12/5 0 -8/5 4/5 6/5 4/5
2 q1 chi8 3,4,4,6 : 0 -4/5 0 -6/5 4/5 0 -6/5 0 4/5 -8/5 -8/5 -8/5
2 q1 chi12 1,1,1,12 : -1/2 1/2 -1 3 3 -12 -1 1 4 3/2 3/2 3 3 1
2 q1 chi12 1,1,3,4 : -1/2 1/2 -1 3 -3 12 -1 -1 -4 3/2 3/2 3 1 -1
2 q1 chi12 1,1,4,12 : -1/2 1/2 -1 3/2 0 0 -1/2 0 0 3/2 3/2 3 2 0
2 q1 chi12 1,2,2,12 : 0 0 -1 3/2 0 0 -1/2 0 0 0 0 3 1 1
2 q1 chi12 1,2,4,6 : 0 0 -1 3/2 0 0 1/2 0 0 0 0 -3 0 0
2 q1 chi12 1,3,3,12 : -1/2 1/2 -1 1 -1 4 1 1 4 -1/2 -1/2 -1 1 1/3
2 q1 chi12 1,3,4,4 : 0 0 -1 3/2 -3 12 -1/2 -1 -4 0 0 3 1 -1
2 q1 chi12 1,3,12,12 : 0 0 -1 1/2 -1 4 1/2 1 4 0 0 -1 1 1/3
2 q1 chi12 1,4,4,12 : -1/4 1/4 -1 3/4 -3/2 6 -1/4 -1/2 -2 3/4 3/4 3 1 0
2 q1 chi12 1,6,6,12 : 0 0 -1 1/2 0 0 1/2 0 0 0 0 -1 1 -1/3
2 q1 chi12 1,12,12,12 : 1/4 -1/4 1 1/4 -1/2 2 1/4 1/2 2 1/4 1/4 -1 1 0
2 q1 chi12 2,2,3,4 : 0 0 -1 3/2 0 0 -1/2 0 0 0 0 3 -1 -1
2 q1 chi12 2,3,6,12 : 0 0 -1 1/2 0 0 -1/2 0 0 0 0 1 0 0
2 q1 chi12 3,3,3,4 : -1/2 1/2 -1 1 1 -4 1 -1 -4 -1/2 -1/2 -1 -1 1
2 q1 chi12 3,3,4,12 : -1/2 1/2 -1 1/2 0 0 1/2 0 0 -1/2 -1/2 -1 0 2/3
2 q1 chi12 3,4,4,4 : 1/4 -1/4 -1 3/4 -3/2 6 -1/4 -1/2 -2 -3/4 -3/4 3 0 -1
2 q1 chi12 3,4,6,6 : 0 0 -1 1/2 0 0 1/2 0 0 0 0 -1 -1 1/3
2 q1 chi12 3,4,12,12 : -1/4 1/4 -1 1/4 -1/2 2 1/4 1/2 2 -1/4 -1/4 -1 0 1/3
2 q1 chi24 1,1,2,12 : 0 -1/3 2 0 2/3 0 0 1 0 16 4/3 16/3
2 q1 chi24 1,1,4,6 : 0 -1/3 2 0 -2/3 0 0 -1 8 0 8/3 -8/3
2 q1 chi24 1,2,3,4 : 0 -1/3 2 0 2/3 0 0 1 0 -8 -2/3 -8/3
2 q1 chi24 1,2,4,12 : 0 -1/3 1 0 1/3 0 0 1 0 4 2/3 4/3
2 q1 chi24 1,3,6,12 : 0 -1/3 2/3 0 2/3 0 0 1/3 4/3 8/3 2/3 0
2 q1 chi24 1,4,4,6 : 0 -1/3 1 0 -1/3 0 0 -1 4 0 4/3 -8/3
2 q1 chi24 1,6,12,12 : 0 -1/3 1/3 0 1/3 0 0 1/3 8/3 8/3 4/3 0
2 q1 chi24 2,3,3,12 : 0 -1/3 2/3 0 -2/3 0 0 -1/3 -8/3 16/3 0 8/3
2 q1 chi24 2,3,4,4 : 0 -1/3 1 0 1/3 0 0 1 0 -8 -4/3 -8/3
2 q1 chi24 2,3,12,12 : 0 -1/3 1/3 0 -1/3 0 0 -1/3 -4/3 16/3 0 8/3
2 q1 chi24 3,3,4,6 : 0 -1/3 2/3 0 2/3 0 0 1/3 -8/3 -16/3 -4/3 0
2 q1 chi24 3,4,6,12 : 0 -1/3 1/3 0 1/3 0 0 1/3 -4/3 -4/3 -2/3 0
C q2 chi0 1,2 : 1/4 -1/2 0 5/4 0 0 0 0 0 0 0 0 0 0
C q2 chi0 1,4 : 3/8 1/2 -3/4 -15/8 0 11/4 0 0 0 0 0 0 0 0
C q2 chi0 1,8 : 3/32 -1/8 -9/32 15/32 7/16 -33/32 0 23/16 0 0 0 9/2 0 0
C q2 chi0 1,16 : 3/32 1/8 -9/32 -15/32 21/32 33/32 -15/16 -69/32 47/16 0 0 0 0 9/2
3 q3 chi0 1,3,1 : 1/4 2/3 -1/2 -5/4 0 11/6 0 0 0 0 0 0 0 0
3 q3 chi0 1,3,2 : 0 -1/6 1/4 0 0 11/12 0 0 0 0 0 0 0 0
3 q3 chi0 1,3,4 : 1/8 1/6 -1/2 -5/8 0 11/6 0 0 0 0 0 0 0 0
3 q3 chi0 1,3,8 : 1/32 -1/24 -7/32 5/32 7/16 -77/96 0 23/16 0 0 0 3/2 0 0
3 q3 chi0 1,3,16 : 1/32 1/24 -7/32 -5/32 21/32 77/96 -15/16 -69/32 47/16 0 0 0 0 3/2
3 q3 chi0 1,12,1 : 1/8 1/3 -5/16 -5/8 7/16 55/48 -5/8 -23/16 47/24 1 3 0 6 3
3 q3 chi0 1,12,2 : 0 -1/12 5/32 0 -7/32 55/96 5/16 -23/32 47/48 -1/2 3/2 0 3 3/2
3 q3 chi0 1,12,4 : 1/16 1/12 -5/16 -5/16 7/16 55/48 -5/8 -23/16 47/24 1 3 0 0 0
3 q3 chi0 1,12,8 : 1/64 -1/48 -5/64 5/64 0 -55/192 5/16 0 47/48 1/4 -3/4 3/4 0 3/4
3 q3 chi0 1,12,16 : 1/64 1/48 -5/64 -5/64 7/32 55/192 -5/8 -23/32 47/24 1/4 3/4 3/4 0 3/4
3 q3 chi0 2,6,1 : 7/48 -1/4 -3/16 35/48 7/24 -11/16 0 23/24 0 0 0 3 0 0
3 q3 chi0 3,4,1 : 1/8 1/3 -5/16 -5/8 7/16 55/48 -5/8 -23/16 47/24 -1 -3 0 -6 3
3 q3 chi0 3,4,2 : 0 -1/12 5/32 0 -7/32 55/96 5/16 -23/32 47/48 1/2 -3/2 0 3 -3/2
3 q3 chi0 3,4,4 : 1/16 1/12 -5/16 -5/16 7/16 55/48 -5/8 -23/16 47/24 -1 -3 0 0 0
3 q3 chi0 3,4,8 : 1/64 -1/48 -5/64 5/64 0 -55/192 5/16 0 47/48 -1/4 3/4 3/4 0 -3/4
3 q3 chi0 3,4,16 : 1/64 1/48 -5/64 -5/64 7/32 55/192 -5/8 -23/32 47/24 -1/4 -3/4 -3/4 0 3/4
3 q3 chi0 4,12,1 : 3/16 1/4 -7/16 -15/16 7/16 77/48 -5/8 -23/16 47/24 0 0 0 0 3
3 q3 chi8 1,6,1 : -4/5 0 -6/5 0 32/5 0 -48/5 0 24/5 0 -12/5 0
3 q3 chi8 1,6,2 : 2/5 0 -12/5 0 8/5 0 48/5 0 12/5 0 -12/5 0
3 q3 chi8 1,6,4 : -4/5 0 -6/5 0 8/5 0 -12/5 0 0 0 6/5 0
3 q3 chi8 1,6,8 : 2/5 0 -12/5 0 2/5 0 12/5 0 6/5 0 0 0
3 q3 chi8 1,6,16 : 2/5 -6/5 3/5 -9/5 2/5 0 -3/5 0 6/5 18/5 0 -12/5
3 q3 chi8 2,3,1 : 2/5 0 -12/5 0 16/5 0 96/5 0 0 0 12/5 0
3 q3 chi8 2,3,2 : -4/5 0 -6/5 0 16/5 0 -24/5 0 -12/5 0 0 0
3 q3 chi8 2,3,4 : 2/5 0 -12/5 0 4/5 0 24/5 0 -12/5 0 6/5 0
3 q3 chi8 2,3,8 : -4/5 0 -6/5 0 4/5 0 -6/5 0 6/5 0 -6/5 0
3 q3 chi8 2,3,16 : -1/5 3/5 6/5 -18/5 1/5 0 6/5 0 -6/5 6/5 6/5 6/5
3 q3 chi8 2,12,1 : -
3 q3 chi8 4,6,1 : 0 -4/5 0 -6/5 24/5 -32/5 -36/5 48/5 24/5 0 -18/5 -24/5
3 q3 chi12 1,1,1 : -1 0 0 12 0 0 -4 0 0 3 0 0 0 0
3 q3 chi12 1,1,2 : -1 0 0 6 0 0 2 0 0 -3 0 0 0 0
3 q3 chi12 1,1,4 : -1 0 0 3 0 0 -1 0 0 3 0 0 0 0
3 q3 chi12 1,1,8 : 1/2 -3/2 0 3/2 0 0 1/2 0 0 3/2 9/2 0 0 0
3 q3 chi12 1,1,16 : -1/4 3/4 -3/2 3/4 0 0 -1/4 0 0 3/4 9/4 9/2 3 0
3 q3 chi12 1,4,1 : -1/2 1/2 -1 6 -3 12 -2 -1 -4 3/2 3/2 3 3 -3
3 q3 chi12 1,4,2 : -1/2 1/2 -1 3 3 -12 1 -1 -4 -3/2 -3/2 -3 0 0
3 q3 chi12 1,4,4 : -1/2 1/2 -1 3/2 -3 12 -1/2 -1 -4 3/2 3/2 3 0 0
3 q3 chi12 1,4,8 : 1/4 -1/4 -1 3/4 -3/2 6 1/4 1/2 2 3/4 3/4 -3 0 0
3 q3 chi12 1,4,16 : -1/8 1/8 -1 3/8 -3/4 3 -1/8 -1/4 -1 3/8 3/8 3 3/2 0
3 q3 chi12 2,2,1 : 0 -1 0 9 -12 0 -3 -4 0 0 -3 0 0 0
3 q3 chi12 3,3,1 : -1 0 0 4 0 0 4 0 0 -1 0 0 0 0
3 q3 chi12 3,3,2 : -1 0 0 2 0 0 -2 0 0 1 0 0 0 0
3 q3 chi12 3,3,4 : -1 0 0 1 0 0 1 0 0 -1 0 0 0 0
3 q3 chi12 3,3,8 : 1/2 -3/2 0 1/2 0 0 -1/2 0 0 -1/2 -3/2 0 0 0
3 q3 chi12 3,3,16 : -1/4 3/4 -3/2 1/4 0 0 1/4 0 0 -1/4 -3/4 -3/2 0 1
3 q3 chi12 3,12,1 : -1/2 1/2 -1 2 -1 4 2 1 4 -1/2 -1/2 -1 3 1
3 q3 chi12 3,12,2 : -1/2 1/2 -1 1 1 -4 -1 1 4 1/2 1/2 1 0 0
3 q3 chi12 3,12,4 : -1/2 1/2 -1 1/2 -1 4 1/2 1 4 -1/2 -1/2 -1 0 0
3 q3 chi12 3,12,8 : 1/4 -1/4 -1 1/4 -1/2 2 -1/4 -1/2 -2 -1/4 -1/4 1 0 0
3 q3 chi12 3,12,16 : -1/8 1/8 -1 1/8 -1/4 1 1/8 1/4 1 -1/8 -1/8 -1 0 1/2
3 q3 chi12 4,4,1 : 0 0 -1 9/2 -9 12 -3/2 -3 -4 0 0 3 3 -3
3 q3 chi12 6,6,1 : 0 -1 0 3 -4 0 3 4 0 0 1 0 0 0
3 q3 chi12 12,12,1 : 0 0 -1 3/2 -3 4 3/2 3 4 0 0 -1 3 1
3 q3 chi24 1,2,1 : -1/3 0 8 0 8/3 0 -1 0 0 0 -4/3 0
3 q3 chi24 1,2,2 : -1/3 0 4 0 -4/3 0 1 0 -4 0 -4/3 0
3 q3 chi24 1,2,4 : -1/3 0 2 0 2/3 0 -1 0 0 0 2/3 0
3 q3 chi24 1,2,8 : -1/3 0 1 0 -1/3 0 1 0 2 0 2/3 0
3 q3 chi24 1,2,16 : 1/6 -1/2 1/2 0 1/6 0 1/2 3/2 0 6 2/3 2
3 q3 chi24 2,4,1 : 0 -1/3 6 -8 2 8/3 0 1 0 -16 -2 -16/3
3 q3 chi24 3,6,1 : -1/3 0 8/3 0 8/3 0 -1/3 0 8/3 0 4/3 0
3 q3 chi24 3,6,2 : -1/3 0 4/3 0 -4/3 0 1/3 0 4/3 0 0 0
3 q3 chi24 3,6,4 : -1/3 0 2/3 0 2/3 0 -1/3 0 -4/3 0 -2/3 0
3 q3 chi24 3,6,8 : -1/3 0 1/3 0 -1/3 0 1/3 0 -2/3 0 0 0
3 q3 chi24 3,6,16 : 1/6 -1/2 1/6 0 1/6 0 1/6 1/2 -4/3 -2 -2/3 0
3 q3 chi24 6,12,1 : 0 -1/3 2 -8/3 2 8/3 0 1/3 4 16/3 2 0
)";

}  // namespace qf48
