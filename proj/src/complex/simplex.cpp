#include "hexaform/complex/simplex.hpp"

#include "hexaform/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hexaform::complex {

Pentachoron::Pentachoron(std::array<VertexId, 5> vertices)
{
    for (std::size_t i = 1; i < 5; ++i)
        if (vertices[i - 1] >= vertices[i])
            throw MalformedInput("pentachoron vertices must be strictly increasing");
    v = vertices;
}

Pentachoron Pentachoron::from_unsorted(std::array<VertexId, 5> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    return Pentachoron(vertices);
}

std::array<Tetrahedron, 5> faces(const Pentachoron& u)
{
    std::array<Tetrahedron, 5> out{};
    for (std::size_t k = 0; k < 5; ++k) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != k)
                out[k].v[j++] = u.v[i];
    }
    return out;
}

std::array<Triangle, 4> faces(const Tetrahedron& t)
{
    std::array<Triangle, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != k)
                out[k].v[j++] = t.v[i];
    }
    return out;
}

std::array<Triangle, 10> triangles(const Pentachoron& u)
{
    std::array<Triangle, 10> out{};
    std::size_t n = 0;
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b)
            for (std::size_t c = b + 1; c < 5; ++c)
                out[n++] = Triangle{{u.v[a], u.v[b], u.v[c]}};
    return out;
}

std::string to_string(const Pentachoron& u)
{
    std::ostringstream os;
    os << '[' << u.v[0] << ',' << u.v[1] << ',' << u.v[2] << ',' << u.v[3] << ',' << u.v[4] << ']';
    return os.str();
}

std::string to_string(const Tetrahedron& t)
{
    std::ostringstream os;
    os << '[' << t.v[0] << ',' << t.v[1] << ',' << t.v[2] << ',' << t.v[3] << ']';
    return os.str();
}

int sort_parity(std::vector<VertexId> values)
{
    int sign = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j + 1 < values.size() - i; ++j)
            if (values[j] > values[j + 1]) {
                std::swap(values[j], values[j + 1]);
                sign = -sign;
            } else if (values[j] == values[j + 1]) {
                throw UsageError("sort_parity: repeated value");
            }
    return sign;
}

} // namespace hexaform::complex
