#include "swbesov/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "swbesov/error.hpp"

namespace swbesov {

namespace {
static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

template <class T>
void put(std::ostream& os, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    os.write(buf, sizeof(T));
}

template <class T>
T get(std::istream& is) {
    char buf[sizeof(T)];
    if (!is.read(buf, sizeof(T))) throw Error(ErrorKind::io_failure, "truncated snapshot");
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}
}  // namespace

void write_snapshot(std::ostream& os, const Field& f) {
    const Grid& g = f.grid();
    const int rank = f.components() == 1 ? 0 : 1;
    if (rank == 1 && f.components() != g.dims())
        throw Error(ErrorKind::invalid_params, "snapshots hold scalars or N-vectors");
    os.write("SWF1", 4);
    put<std::uint8_t>(os, static_cast<std::uint8_t>(g.dims()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.points_per_dim()));
    put<double>(os, g.period());
    put<std::uint8_t>(os, static_cast<std::uint8_t>(rank));
    for (int c = 0; c < f.components(); ++c) {
        auto v = f.physical(c);
        os.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
    }
    if (!os) throw Error(ErrorKind::io_failure, "snapshot write failed");
}

void write_snapshot(const std::string& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::io_failure, "cannot open " + path);
    write_snapshot(os, f);
}

Field read_snapshot(std::istream& is, GridPtr grid_hint) {
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "SWF1", 4) != 0)
        throw Error(ErrorKind::io_failure, "bad snapshot magic");
    int dims = get<std::uint8_t>(is);
    int n = static_cast<int>(get<std::uint32_t>(is));
    double period = get<double>(is);
    int rank = get<std::uint8_t>(is);
    GridPtr grid = grid_hint;
    if (!grid || grid->dims() != dims || grid->points_per_dim() != n || grid->period() != period)
        grid = make_grid(dims, n, period);
    int comps = rank == 0 ? 1 : dims;
    std::vector<RealBuffer> values(static_cast<std::size_t>(comps), RealBuffer(grid->physical_size()));
    for (auto& v : values) {
        if (!is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double))))
            throw Error(ErrorKind::io_failure, "truncated snapshot samples");
    }
    return Field::from_physical(grid, values);
}

Field read_snapshot(const std::string& path, GridPtr grid_hint) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::io_failure, "cannot open " + path);
    return read_snapshot(is, std::move(grid_hint));
}

}  // namespace swbesov
