#include "netheat/fixtures.hpp"

namespace netheat::fixtures {

Graph p3() {
    return Graph::build(
        {{"v0"}, {"v1"}, {"v2"}, {"v3"}},
        {{"e0", "v0", "v1"}, {"e1", "v1", "v2"}, {"e2", "v2", "v3"}});
}

Graph single() {
    return Graph::build({{"a"}, {"b"}}, {{"e0", "a", "b"}});
}

Graph single_d() {
    return Graph::build({{"a"}, {"b", true}}, {{"e0", "a", "b"}});
}

Graph single_dd() {
    return Graph::build({{"a", true}, {"b", true}}, {{"e0", "a", "b"}});
}

Graph star4_inf() {
    return Graph::build(
        {{"c", true}, {"l1"}, {"l2"}, {"l3"}, {"l4"}},
        {{"e1", "c", "l1"}, {"e2", "c", "l2"}, {"e3", "c", "l3"}, {"e4", "c", "l4"}});
}

Graph star_k(int k) {
    std::vector<VertexDecl> vs{{"c"}};
    std::vector<EdgeDecl> es;
    for (int i = 1; i <= k; ++i) {
        std::string suffix = (i < 10 ? "0" : "") + std::to_string(i);
        vs.push_back({"l" + suffix});
        es.push_back({"e" + suffix, "c", "l" + suffix});
    }
    return Graph::build(vs, es);
}

Graph in_star_k(int k, bool center_flagged) {
    std::vector<VertexDecl> vs{{"c", center_flagged}};
    std::vector<EdgeDecl> es;
    for (int i = 1; i <= k; ++i) {
        std::string suffix = std::to_string(1000 + i).substr(1);
        vs.push_back({"l" + suffix});
        es.push_back({"e" + suffix, "l" + suffix, "c"});
    }
    return Graph::build(vs, es);
}

Graph k3pair_inf() {
    return Graph::build(
        {{"a1"}, {"a2"}, {"a3"}, {"b1"}, {"b2"}, {"b3"}, {"w", true}},
        {{"ea1", "a1", "a2"},
         {"ea2", "a2", "a3"},
         {"ea3", "a3", "a1"},
         {"eb1", "b1", "b2"},
         {"eb2", "b2", "b3"},
         {"eb3", "b3", "b1"},
         {"f1", "a3", "w"},
         {"f2", "w", "b3"}});
}

Graph ee_inf() {
    return Graph::build(
        {{"d1", true}, {"d2", true}, {"p0"}, {"p1"}, {"p2"}, {"p3"}},
        {{"ed", "d1", "d2"},
         {"q0", "p0", "p1"},
         {"q1", "p1", "p2"},
         {"q2", "p2", "p3"}});
}

std::vector<std::pair<std::string, Graph>> gallery() {
    return {
        {"p3", p3()},
        {"single", single()},
        {"single-d", single_d()},
        {"single-dd", single_dd()},
        {"star4-inf", star4_inf()},
        {"star4", star_k(4)},
        {"k3pair-inf", k3pair_inf()},
        {"ee-inf", ee_inf()},
    };
}

}  // namespace netheat::fixtures
