#include <string>
#include <vector>

#include "axiskit/error.hpp"
#include "axiskit/projection.hpp"

namespace axiskit {

namespace {

enum Slot { NE = 0, NW = 1, SW = 2, SE = 3 };
enum Corner { North = 0, West = 1, South = 2, East = 3 };

}  // namespace

// Layout: twist crossings X_1..X_t (t = n-2) stacked top to bottom, the clasp
// crossings Y1 (left) and Y2 (right) side by side above the column. The
// column's top ends run into the bottom of the clasp; the clasp's top ends
// loop around the column on either side to its bottom ends.
//
// Face roles: R0 sits between X_1 and the clasp, L0 is the outer triangle
// below X_t, C0 is the clasp bigon, I and O are the long faces west and east
// of the column, and the twist bigons are R1, R2, .. from the top and L1,
// L2, .. from the bottom, with C1 in the middle when the count is odd.
Projection build_twist(int n) {
  if (n < 4) throw Error(ErrorCode::TooFewCrossings, "twist knots need at least 4 crossings, got " + std::to_string(n));
  const int t = n - 2;
  const int y1 = t;
  const int y2 = t + 1;
  auto dart = [](int crossing, Slot s) { return 4 * crossing + s; };

  std::vector<int> mate(4 * n, -1);
  auto join = [&](int a, int b) {
    mate[a] = b;
    mate[b] = a;
  };
  for (int i = 0; i + 1 < t; ++i) {
    join(dart(i, SW), dart(i + 1, NW));
    join(dart(i, SE), dart(i + 1, NE));
  }
  join(dart(y1, NE), dart(y2, NW));
  join(dart(y1, SE), dart(y2, SW));
  join(dart(0, NW), dart(y1, SW));
  join(dart(0, NE), dart(y2, SE));
  join(dart(y1, NW), dart(t - 1, SW));
  join(dart(y2, NE), dart(t - 1, SE));

  Projection raw(std::move(mate));

  std::vector<int> order;
  std::vector<std::string> names;
  auto add = [&](int face, std::string name) {
    order.push_back(face);
    names.push_back(std::move(name));
  };
  // Twist bigon j (1-based) lies between X_j and X_{j+1}.
  auto bigon = [&](int j) { return raw.face_of_corner(j - 1, South); };

  add(raw.face_of_corner(y1, East), "C0");
  if (t % 2 == 0) add(bigon(t / 2), "C1");
  add(raw.face_of_corner(0, West), "I");
  add(raw.face_of_corner(0, East), "O");
  add(raw.face_of_corner(0, North), "R0");
  for (int j = 1; 2 * j < t; ++j) add(bigon(j), "R" + std::to_string(j));
  add(raw.face_of_corner(t - 1, South), "L0");
  for (int j = 1; 2 * j < t; ++j) add(bigon(t - j), "L" + std::to_string(j));

  return raw.relabeled(order, std::move(names));
}

}  // namespace axiskit
