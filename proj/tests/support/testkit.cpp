#include "testkit.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace testkit {

using brokenstick::BigInt;

Rat rat_from_double(double x) {
    if (x == 0.0) {
        return Rat(0);
    }
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [1/2, 1)
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    const int shift = exp - 53;
    if (shift >= 0) {
        return Rat(BigInt(scaled) << shift, BigInt(1));
    }
    return Rat(BigInt(scaled), BigInt(1) << -shift);
}

Rat cart_dist_sq(const BaryPoint& p, const BaryPoint& q) {
    const Rat d1 = p.l1 - q.l1;
    const Rat d2 = p.l2 - q.l2;
    const Rat d3 = p.l3 - q.l3;
    return Rat(2, 3) * (d1 * d1 + d2 * d2 + d3 * d3);
}

double shoelace_area(const Tri& t) {
    const brokenstick::CartPoint a = to_cartesian(t.a);
    const brokenstick::CartPoint b = to_cartesian(t.b);
    const brokenstick::CartPoint c = to_cartesian(t.c);
    const double twice = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    // Normalize by the embedded simplex area, sqrt(3)/3 (side 2*sqrt(3)/3).
    return std::abs(twice) / 2.0 / (std::sqrt(3.0) / 3.0);
}

namespace {

Rat eval(const BaryPoint& p, const Rat& c1, const Rat& c2, const Rat& c3) {
    return c1 * p.l1 + c2 * p.l2 + c3 * p.l3;
}

BaryPoint lerp(const BaryPoint& p, const BaryPoint& q, const Rat& t) {
    const Rat s = Rat(1) - t;
    return BaryPoint(s * p.l1 + t * q.l1, s * p.l2 + t * q.l2, s * p.l3 + t * q.l3);
}

}  // namespace

Polygon clip_halfplane(const Polygon& poly, const Rat& c1, const Rat& c2, const Rat& c3,
                       const Rat& rhs) {
    Polygon out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const BaryPoint& cur = poly[i];
        const BaryPoint& nxt = poly[(i + 1) % n];
        const Rat f_cur = eval(cur, c1, c2, c3) - rhs;
        const Rat f_nxt = eval(nxt, c1, c2, c3) - rhs;
        if (f_cur.sign() <= 0) {
            out.push_back(cur);
        }
        if ((f_cur.sign() < 0 && f_nxt.sign() > 0) || (f_cur.sign() > 0 && f_nxt.sign() < 0)) {
            out.push_back(lerp(cur, nxt, f_cur / (f_cur - f_nxt)));
        }
    }
    return out;
}

Rat polygon_area(const Polygon& poly) {
    Rat area;
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        area += bary_area(Tri{poly[0], poly[i], poly[i + 1]});
    }
    return area;
}

Rat gap_sublevel_area(const Tri& t, const Rat& delta) {
    Polygon poly{t.a, t.b, t.c};
    for (int i = 1; i <= 3 && !poly.empty(); ++i) {
        for (int j = 1; j <= 3 && !poly.empty(); ++j) {
            if (i == j) {
                continue;
            }
            Rat c[4];  // l_i - l_j <= delta
            c[i] = Rat(1);
            c[j] = Rat(-1);
            poly = clip_halfplane(poly, c[1], c[2], c[3], delta);
        }
    }
    return polygon_area(poly);
}

Rat random_rat(Rng& rng, long long den) {
    const auto num = static_cast<long long>(rng.next_u64() % static_cast<std::uint64_t>(den + 1));
    return Rat(num, den);
}

BaryPoint random_point(Rng& rng, long long den) {
    // Two draws on a common denominator; order statistics give the triple.
    auto a = static_cast<long long>(rng.next_u64() % static_cast<std::uint64_t>(den + 1));
    auto b = static_cast<long long>(rng.next_u64() % static_cast<std::uint64_t>(den + 1));
    if (a > b) {
        std::swap(a, b);
    }
    return BaryPoint(Rat(a, den), Rat(b - a, den), Rat(den - b, den));
}

Tri random_triangle(Rng& rng) {
    for (;;) {
        Tri t{random_point(rng), random_point(rng), random_point(rng)};
        if (!bary_area(t).is_zero()) {
            return t;
        }
    }
}

BaryPoint random_dyadic_point(Rng& rng) {
    const long long scale = 1LL << 20;
    for (;;) {
        const auto a = static_cast<long long>(rng.next_u64() % (scale + 1));
        const auto b = static_cast<long long>(rng.next_u64() % (scale + 1));
        const Rat l1(a, scale);
        const Rat l2 = Rat(b, scale) * (Rat(1) - l1);
        const Rat l3 = Rat(1) - l1 - l2;
        if (l1 != l2 && l1 != l3 && l2 != l3) {
            return BaryPoint(l1, l2, l3);
        }
    }
}

BaryPoint random_point_in(const Tri& t, Rng& rng) {
    // Strictly positive weights keep the convex combination away from the
    // vertices and edges of t, so the result is interior whenever t is
    // non-degenerate.
    const auto w1 = static_cast<long long>(1 + rng.next_u64() % 1000);
    const auto w2 = static_cast<long long>(1 + rng.next_u64() % 1000);
    const auto w3 = static_cast<long long>(1 + rng.next_u64() % 1000);
    const long long s = w1 + w2 + w3;
    Rat l[3];
    for (int i = 0; i < 3; ++i) {
        l[i] = (Rat(w1) * t.a.coord(i) + Rat(w2) * t.b.coord(i) + Rat(w3) * t.c.coord(i)) / Rat(s);
    }
    return BaryPoint(l[0], l[1], l[2]);
}

double chi_sq_critical(int dof, double alpha) {
    return boost::math::quantile(boost::math::chi_squared(dof), 1.0 - alpha);
}

ChiSq chi_sq_merged(const std::vector<long long>& counts, const std::vector<double>& expected) {
    std::vector<long long> obs;
    std::vector<double> exp;
    long long o_acc = 0;
    double e_acc = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        o_acc += counts[i];
        e_acc += expected[i];
        if (e_acc >= 5.0) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = 0;
            e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0) {
        if (exp.empty()) {
            throw std::invalid_argument("chi_sq_merged: too little mass to form a bin");
        }
        obs.back() += o_acc;
        exp.back() += e_acc;
    }
    ChiSq result;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double d = static_cast<double>(obs[i]) - exp[i];
        result.statistic += d * d / exp[i];
    }
    result.dof = static_cast<int>(obs.size()) - 1;
    return result;
}

namespace {

std::string attr_value(const std::string& line, const std::string& name) {
    const std::string key = name + "=\"";
    const std::size_t at = line.find(key);
    if (at == std::string::npos) {
        throw std::runtime_error("svg: missing attribute " + name + " in: " + line);
    }
    const std::size_t start = at + key.size();
    const std::size_t end = line.find('"', start);
    if (end == std::string::npos) {
        throw std::runtime_error("svg: unterminated attribute in: " + line);
    }
    return line.substr(start, end - start);
}

}  // namespace

SvgDoc parse_svg(const std::string& text) {
    SvgDoc doc;
    std::size_t pos = 0;
    bool saw_meta = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) {
            eol = text.size();
        }
        const std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.rfind("<svg ", 0) == 0) {
            doc.width = std::stoi(attr_value(line, "width"));
            doc.height = std::stoi(attr_value(line, "height"));
        } else if (line.rfind("<!-- brokenstick ", 0) == 0) {
            if (std::sscanf(line.c_str(), "%*s %*s %*s %*s %*s scale=%lf offset=%lf,%lf",
                            &doc.scale, &doc.offset_x, &doc.offset_y) != 3) {
                throw std::runtime_error("svg: malformed metadata comment: " + line);
            }
            saw_meta = true;
        } else if (line.rfind("<polygon ", 0) == 0) {
            SvgPolygon poly;
            poly.cls = attr_value(line, "class");
            const std::string pts = attr_value(line, "points");
            const char* cur = pts.c_str();
            double x = 0.0, y = 0.0;
            int read = 0;
            while (std::sscanf(cur, "%lf,%lf%n", &x, &y, &read) == 2) {
                poly.points.emplace_back(x, y);
                cur += read;
                while (*cur == ' ') {
                    ++cur;
                }
            }
            if (poly.points.size() < 3) {
                throw std::runtime_error("svg: polygon with fewer than 3 points: " + line);
            }
            doc.polygons.push_back(std::move(poly));
        }
    }
    if (doc.width <= 0 || doc.height <= 0 || !saw_meta) {
        throw std::runtime_error("svg: missing <svg> header or metadata comment");
    }
    return doc;
}

bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    int roots = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            const std::size_t end = text.find("?>", i);
            if (end == std::string::npos) {
                return false;
            }
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const std::size_t end = text.find("-->", i);
            if (end == std::string::npos) {
                return false;
            }
            i = end + 3;
            continue;
        }
        const std::size_t end = text.find('>', i);
        if (end == std::string::npos) {
            return false;
        }
        const bool closing = text[i + 1] == '/';
        const bool self_closing = text[end - 1] == '/';
        std::size_t name_start = i + (closing ? 2 : 1);
        std::size_t name_end = name_start;
        while (name_end < end && !std::isspace(static_cast<unsigned char>(text[name_end])) &&
               text[name_end] != '/' && text[name_end] != '>') {
            ++name_end;
        }
        const std::string name = text.substr(name_start, name_end - name_start);
        if (name.empty()) {
            return false;
        }
        if (closing) {
            if (stack.empty() || stack.back() != name) {
                return false;
            }
            stack.pop_back();
        } else if (!self_closing) {
            if (stack.empty()) {
                ++roots;
            }
            stack.push_back(name);
        } else if (stack.empty()) {
            ++roots;
        }
        i = end + 1;
    }
    return stack.empty() && roots == 1;
}

std::pair<double, double> to_world(const SvgDoc& doc, double px, double py) {
    return {(px - doc.offset_x) / doc.scale, 1.0 - (py - doc.offset_y) / doc.scale};
}

}  // namespace testkit
