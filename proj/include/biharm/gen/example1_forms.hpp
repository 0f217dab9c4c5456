// Generated by scripts/generate_example1_forms.py -- do not edit.
#pragma once
#include <cmath>

namespace biharm::gen {

// polar angle measured from the positive x axis, range [0, 2*pi)
inline double lshape_angle(double x, double y) {
    double t = std::atan2(y, x);
    return t < 0 ? t + 2.0 * M_PI : t;
}

inline double example1_value(double x, double y) {
    if (x * x + y * y < 1e-28) return 0.0;
    double u;
    const double x0 = std::pow(x, 2);
    const double x1 = std::pow(y, 2);
    const double x2 = 0.31672560517369589*M_PI;
    const double x3 = 0.68327439482630411*M_PI;
    const double x4 = lshape_angle(x, y);
    const double x5 = 0.45551626321753607*x4;
    const double x6 = 1.5444837367824639*x4;
    u = -std::pow(x0 - 1, 2)*std::pow(x0 + x1, 0.77224186839123196)*std::pow(x1 - 1, 2)*((0.64746554216442818*std::sin(x2) - 2.195311300054375*std::sin(x3))*(std::cos(x5) - std::cos(x6)) - (2.195311300054375*std::sin(x5) - 0.64746554216442818*std::sin(x6))*(std::cos(x2) - std::cos(x3)));
    return u;
}

inline void example1_grad(double x, double y, double& gx, double& gy) {
    if (x * x + y * y < 1e-28) { gx = gy = 0.0; return; }
    const double x0 = std::pow(x, 2);
    const double x1 = x0 - 1;
    const double x2 = std::pow(y, 2);
    const double x3 = x2 - 1;
    const double x4 = 0.31672560517369589*M_PI;
    const double x5 = 0.68327439482630411*M_PI;
    const double x6 = std::cos(x4) - std::cos(x5);
    const double x7 = lshape_angle(x, y);
    const double x8 = 0.45551626321753607*x7;
    const double x9 = std::sin(x8);
    const double x10 = 1.5444837367824639*x7;
    const double x11 = std::sin(x10);
    const double x12 = 0.64746554216442818*std::sin(x4) - 2.195311300054375*std::sin(x5);
    const double x13 = -std::cos(x10) + std::cos(x8);
    const double x14 = x12*x13 - x6*(-0.64746554216442818*x11 + 2.195311300054375*x9);
    const double x15 = x*x14;
    const double x16 = x0 + x2;
    const double x17 = 4*std::pow(x16, 0.77224186839123196);
    const double x18 = std::pow(x16, -0.22775813160876804);
    const double x19 = x12*(-1.5444837367824639*x11 + 0.45551626321753607*x9) + 1.0*x13*x6;
    const double x20 = 1.5444837367824639*x18;
    const double x21 = x14*y;
    gx = -x1*std::pow(x3, 2)*(x1*x15*x20 + x1*x18*x19*y + x15*x17);
    gy = std::pow(x1, 2)*x3*(x*x18*x19*x3 - x17*x21 - x20*x21*x3);
}

inline void example1_hess(double x, double y, double& hxx, double& hxy, double& hyy) {
    if (x * x + y * y < 1e-28) { hxx = hxy = hyy = 0.0; return; }
    const double x0 = std::pow(y, 2);
    const double x1 = x0 - 1;
    const double x2 = std::pow(x1, 2);
    const double x3 = std::pow(x, 2);
    const double x4 = x0 + x3;
    const double x5 = std::pow(x4, 0.77224186839123196);
    const double x6 = 0.31672560517369589*M_PI;
    const double x7 = 0.68327439482630411*M_PI;
    const double x8 = std::cos(x6) - std::cos(x7);
    const double x9 = lshape_angle(x, y);
    const double x10 = 0.45551626321753607*x9;
    const double x11 = std::sin(x10);
    const double x12 = 1.5444837367824639*x9;
    const double x13 = std::sin(x12);
    const double x14 = 2.195311300054375*x11 - 0.64746554216442818*x13;
    const double x15 = 0.64746554216442818*std::sin(x6) - 2.195311300054375*std::sin(x7);
    const double x16 = std::cos(x10);
    const double x17 = std::cos(x12);
    const double x18 = x16 - x17;
    const double x19 = -x14*x8 + x15*x18;
    const double x20 = x19*x5;
    const double x21 = x3 - 1;
    const double x22 = 4*x21;
    const double x23 = std::pow(x4, -0.22775813160876804);
    const double x24 = 1.5444837367824639*x23;
    const double x25 = std::pow(x21, 2);
    const double x26 = 0.45551626321753607*x11;
    const double x27 = 1.5444837367824639*x13;
    const double x28 = x26 - x27;
    const double x29 = x15*x28 + 1.0*x18*x8;
    const double x30 = x*y;
    const double x31 = x23*x30;
    const double x32 = x19*x21;
    const double x33 = std::pow(x4, -1.227758131608768);
    const double x34 = 2.0*x;
    const double x35 = x26*y;
    const double x36 = x27*y;
    const double x37 = 0.91103252643507214*x11;
    const double x38 = 3.0889674735649279*x13;
    const double x39 = x16*y;
    const double x40 = 0.20749506605566761*x39;
    const double x41 = 2.3854300131855233*x17*y;
    const double x42 = 6.1779349471298557*x31;
    const double x43 = x0*x23;
    const double x44 = x1*x21;
    const double x45 = 1.0/x4;
    const double x46 = x*x45;
    const double x47 = x0*x45;
    const double x48 = 2.0*x47;
    const double x49 = -x8;
    const double x50 = -x15;
    const double x51 = x14*x49 - x18*x50;
    const double x52 = x5*x51;
    hxx = x2*(-3.0889674735649279*x*x25*x29*x33*y - x19*x24*x25 + 0.70353746037940454*x19*x25*x3*x33 - x20*x22 - 8*x20*x3 - 8*x21*x29*x31 - 12.355869894259711*x23*x3*x32 + x25*x33*y*(x15*(x*x37 - x*x38 + x40 - x41) + x8*(x16*x34 - x17*x34 - x35 + x36)));
    hxy = x44*(0.70353746037940454*x*x1*x19*x21*x33*y - 1.5444837367824639*x0*x29*x33*x44 - x1*x19*x42 + 1.5444837367824639*x1*x21*x29*x3*x33 + 4*x1*x23*x29*x3 - 16*x20*x30 - x22*x29*x43 - x23*x44*(x15*(x28 - x37*x47 + x38*x47 + x40*x46 - x41*x46) - x8*(x16*x48 - 1.0*x16 - x17*x48 + 1.0*x17 + x35*x46 - x36*x46)) - x32*x42);
    hyy = x25*(8*x*x1*x23*x29*y + 3.0889674735649279*x*x2*x29*x33*y - x*x2*x33*(x49*(1.5444837367824639*x*x13 - x*x26 + 2.0*x17*y - 2.0*x39) - x50*(-0.20749506605566761*x*x16 + 2.3854300131855233*x*x17 + 0.91103252643507214*x11*y - x38*y)) + 0.70353746037940454*x0*x2*x33*x51 - 8*x0*x52 - 12.355869894259711*x1*x43*x51 - 4*x1*x52 - x2*x24*x51);
}

inline double example1_rhs(double x, double y) {
    if (x * x + y * y < 1e-28) return 0.0;
    double f;
    const double x0 = std::pow(y, 3);
    const double x1 = 0.31672560517369589*M_PI;
    const double x2 = 0.68327439482630411*M_PI;
    const double x3 = std::cos(x1) - std::cos(x2);
    const double x4 = lshape_angle(x, y);
    const double x5 = 0.45551626321753607*x4;
    const double x6 = std::cos(x5);
    const double x7 = 1.5444837367824639*x4;
    const double x8 = std::cos(x7);
    const double x9 = x6 - x8;
    const double x10 = 0.64746554216442818*std::sin(x1) - 2.195311300054375*std::sin(x2);
    const double x11 = std::sin(x5);
    const double x12 = 0.45551626321753607*x11;
    const double x13 = std::sin(x7);
    const double x14 = 1.5444837367824639*x13;
    const double x15 = x12 - x14;
    const double x16 = x10*x15 + 1.0*x3*x9;
    const double x17 = x*x16;
    const double x18 = x0*x17;
    const double x19 = std::pow(x, 2);
    const double x20 = std::pow(y, 2);
    const double x21 = x19 + x20;
    const double x22 = std::pow(x21, -0.22775813160876804);
    const double x23 = x19 - 1;
    const double x24 = x22*x23;
    const double x25 = 128*x24;
    const double x26 = -x10*x9 + x3*(2.195311300054375*x11 - 0.64746554216442818*x13);
    const double x27 = x20*x26;
    const double x28 = std::pow(x21, 0.77224186839123196);
    const double x29 = 3*x19 - 1;
    const double x30 = x28*x29;
    const double x31 = std::pow(x21, -1.227758131608768);
    const double x32 = std::pow(x23, 2);
    const double x33 = x31*x32;
    const double x34 = x19*x27;
    const double x35 = x20 - 1;
    const double x36 = x23*x35;
    const double x37 = x*y;
    const double x38 = x16*x37;
    const double x39 = x22*x38;
    const double x40 = 64*x39;
    const double x41 = x19*x26;
    const double x42 = 98.846959154077692*x35;
    const double x43 = x16*y;
    const double x44 = 24.711739788519423*x43;
    const double x45 = std::pow(x35, 2);
    const double x46 = x*x45;
    const double x47 = x31*x46;
    const double x48 = x23*x47;
    const double x49 = x32*y;
    const double x50 = x31*x49;
    const double x51 = 197.69391830815538*x31;
    const double x52 = std::pow(x, 3);
    const double x53 = x23*x52;
    const double x54 = x26*x45;
    const double x55 = x22*x29;
    const double x56 = 11.256599366070473*x23;
    const double x57 = x19*x54;
    const double x58 = std::pow(x21, -2.227758131608768);
    const double x59 = x46*x58;
    const double x60 = x49*x59;
    const double x61 = x29*x31;
    const double x62 = x0*x16;
    const double x63 = x32*x35*x58;
    const double x64 = x45*x53*x58;
    const double x65 = std::pow(x21, -3.227758131608768);
    const double x66 = x20*x58;
    const double x67 = -1.5444837367824639*x22;
    const double x68 = 0.70353746037940454*x31;
    const double x69 = x19*x68 + x67;
    const double x70 = x26*x32;
    const double x71 = x69*x70;
    const double x72 = x19*x58;
    const double x73 = 1.7275476757443908*x72;
    const double x74 = -x68 + x73;
    const double x75 = 16*x35;
    const double x76 = x20*x75;
    const double x77 = 1.0/x21;
    const double x78 = x*x77;
    const double x79 = x49*x78;
    const double x80 = 4*x16;
    const double x81 = x46*x80;
    const double x82 = 2.0*x6;
    const double x83 = 2.0*x8;
    const double x84 = 0.20749506605566761*x6;
    const double x85 = x84*y;
    const double x86 = 2.3854300131855233*x8;
    const double x87 = x86*y;
    const double x88 = 0.91103252643507214*x11;
    const double x89 = 3.0889674735649279*x13;
    const double x90 = x*x88 - x*x89;
    const double x91 = x10*(x85 - x87 + x90) + x3*(x*x82 - x*x83 - x12*y + x14*y);
    const double x92 = x0*x91;
    const double x93 = 24*x31;
    const double x94 = x49*x91;
    const double x95 = x49*x58;
    const double x96 = x*x12;
    const double x97 = x*x14;
    const double x98 = x*x84;
    const double x99 = x*x86;
    const double x100 = -x10*(-x88*y + x89*y + x98 - x99) + x3*(x82*y - x83*y + x96 - x97);
    const double x101 = x100*x46;
    const double x102 = x32*x45;
    const double x103 = 1.7275476757443908*x66;
    const double x104 = 7.6971167647627876*x65;
    const double x105 = 2*x32;
    const double x106 = std::pow(x21, -2);
    const double x107 = x77*y;
    const double x108 = x20*x77;
    const double x109 = x107*x98 - x107*x99 + x15;
    const double x110 = -x10*(-x108*x88 + x108*x89 + x109) + x3*(x107*x96 - x107*x97 + x108*x82 - x108*x83 - 1.0*x6 + 1.0*x8);
    const double x111 = x110*x35;
    const double x112 = x19*x77;
    const double x113 = x13*y;
    const double x114 = x113*x78;
    const double x115 = x11*y;
    const double x116 = x115*x78;
    const double x117 = 0.41499013211133521*x6;
    const double x118 = 4.7708600263710466*x8;
    const double x119 = x112*x117 - x112*x118;
    const double x120 = -x10*(3.6842578605978193*x114 - 0.094517377125753519*x116 + x119 + x84 - x86) + x3*(x109 + x112*x88 - x112*x89);
    const double x121 = x120*x33;
    const double x122 = 0.18903475425150704*x11;
    const double x123 = 7.3685157211956385*x13;
    const double x124 = x*x6;
    const double x125 = x107*x124;
    const double x126 = x*x8;
    const double x127 = x107*x126;
    const double x128 = x6*y;
    const double x129 = x8*y;
    const double x130 = x0*x77;
    const double x131 = 8.0*x8;
    const double x132 = 8.0*x6;
    const double x133 = x*x108;
    const double x134 = x13*x133;
    const double x135 = x11*x133;
    const double x136 = 2.7330975793052164*x115;
    const double x137 = 9.2669024206947836*x113;
    const double x138 = 3.6441301057402886*x11;
    const double x139 = 12.355869894259711*x13;
    const double x140 = x108*x124;
    const double x141 = x108*x126;
    const double x142 = x112*x115;
    const double x143 = x112*x113;
    const double x144 = x10*(-x*x117 + x*x118 - x130*x138 + x130*x139 + x136 - x137 + 1.2449703963340056*x140 - 14.31258007911314*x141 + 0.094517377125753519*x142 - 3.6842578605978193*x143) + x3*(x112*x85 - x112*x87 + 6.0*x128 - 6.0*x129 + x130*x131 - x130*x132 + 9.2669024206947836*x134 - 2.7330975793052164*x135 + x90);
    const double x145 = 16*x23;
    const double x146 = 6.1779349471298557*x59;
    const double x147 = 24*x26;
    const double x148 = x147*x28;
    const double x149 = 96*x39;
    const double x150 = 148.27043873111654*x22;
    const double x151 = 74.135219365558269*x31*x38;
    const double x152 = 2.1106123811382136*x31;
    const double x153 = -x152;
    const double x154 = x153 + x73;
    const double x155 = 48*x38*x77;
    const double x156 = x91*y;
    const double x157 = 6*x106;
    const double x158 = -x136*x78 + x137*x78;
    const double x159 = 3.6842578605978193*x13;
    const double x160 = 0.094517377125753519*x11;
    const double x161 = 1.2449703963340056*x125 - 14.31258007911314*x127;
    const double x162 = x10*(x108*x159 - x108*x160 + x112*x138 - x112*x139 + x161 - x88 + x89) + x3*(-x108*x84 + x108*x86 - x112*x131 + x112*x132 + x158 - x82 + x83);
    const double x163 = x31*x37;
    const double x164 = x52*x77;
    const double x165 = x164*x6;
    const double x166 = x164*x8;
    const double x167 = 10.932390317220866*x11;
    const double x168 = 37.067609682779134*x13;
    const double x169 = 21.864780634441731*x11;
    const double x170 = 74.135219365558269*x13;
    const double x171 = x112*x128;
    const double x172 = x112*x129;
    const double x173 = 3*x20 - 1;
    const double x174 = x20*x68 + x67;
    const double x175 = x103 + x153;
    const double x176 = x*x100;
    const double x177 = x10*(-x108*x138 + x108*x139 - x112*x159 + x112*x160 + x161 + x88 - x89) + x3*(x108*x131 - x108*x132 + x112*x84 - x112*x86 + x158 + x82 - x83);
    const double x178 = 24.0*y;
    const double x179 = 48.0*x130;
    f = 49.423479577038846*x*x111*x50 - 24.711739788519423*x100*x64 + x101*x105*x106*x69 - 8*x101*x61 + 9.8220650528701443*x102*x120*x66 + 21.881185290721768*x102*x65*x92 - x105*x54*(-x103 + x104*x19*x20 + x68 - x73) + 49.423479577038846*x110*x48*y - 5.6282996830352363*x110*x60 + x111*x25*x37 - 4*x121*x45 - x121*x76 + x144*x145*x47 + x144*x146*x32 + 2.8141498415176181*x16*x60 - x16*x69*x75*x79 - 24.711739788519423*x17*x35*x50 - x18*x25 - 49.423479577038846*x18*x33 - x18*x36*x51 + 22.513198732140945*x18*x63 - 5.6282996830352363*x20*x54*x61 - 16*x20*x71 + 27.640762811910252*x23*x57*x66 + 197.69391830815538*x24*x34 + x24*x41*x42 + 32*x26*x30*x35 + 64*x27*x30 + x27*x42*x55 + x29*x35*x40 - 90.052794928563781*x31*x34*x36 - x31*x56*x57 - 6.9101907029775631*x32*x46*x62*x65 + x32*(x101*x157*x174 + x107*x175*x81 - x146*x177*y - x147*x173*x174 + x148 + x149 + x150*x27 + x151*x173 - x155*x174*x35 - x163*x177*x75 - x173*x176*x93 + x175*x27*x75 - 74.135219365558269*x176*x35*x66 - x54*(x104*std::pow(y, 4) + x152 - 10.365286054466345*x66) + x59*(-x10*(1.6599605284453408*x124 - 19.083440105484187*x126 + x130*x169 - x130*x170 - 9.1297829064493746*x140 + 104.95892058016303*x141 - 1.1342085255090422*x142 + 44.211094327173831*x143 + 0.043054202437445863*x165 - 5.690276347806286*x166 - x167*y + x168*y) + x3*(x*x138 - x*x139 + 67.957284418428413*x134 - 20.042715581571587*x135 - x159*x164 + x160*x164 + 2.4899407926680113*x171 - 28.62516015822628*x172 + x178*x6 - x178*x8 - x179*x6 + x179*x8))) + 16*x33*x92 + x35*x43*x51*x53 - 8*x35*x71 + x35*x93*x94 - x36*x40 - 22.513198732140945*x43*x64 + x44*x46*x61 - x44*x48 - 14.733097579305216*x45*x91*x95 - x45*(6.1779349471298557*x*x162*x95 - x145*x154*x41 + x145*x162*x163 + x147*x29*x69 - x148 + x149 - x150*x41 + x151*x29 + x154*x79*x80 - x155*x23*x69 - 74.135219365558269*x156*x23*x72 - x156*x29*x93 + x157*x69*x94 + x70*(std::pow(x, 4)*x104 + x152 - 10.365286054466345*x72) - x95*(x10*(-x*x167 + x*x168 - 1.6599605284453408*x128 + 19.083440105484187*x129 - 0.043054202437445863*x130*x6 + 5.690276347806286*x130*x8 + 44.211094327173831*x134 - 1.1342085255090422*x135 + x164*x169 - x164*x170 + 9.1297829064493746*x171 - 104.95892058016303*x172) + x3*(-24.0*x124 + 24.0*x126 - x130*x159 + x130*x160 + x138*y - x139*y - 2.4899407926680113*x140 + 28.62516015822628*x141 - 20.042715581571587*x142 + 67.957284418428413*x143 + 48.0*x165 - 48.0*x166))) + x49*x74*x77*x81 + 12.355869894259711*x54*x55 + x56*x59*x62 - 2*x60*(x10*(-x108*x122 + x108*x123 + x112*x122 - x112*x123 + x122 - x123 + 0.87303446666011628*x125 - 15.231996400548379*x127) + x3*(-x108*x117 + x108*x118 + 9.862192807727675*x114 - 1.9165824299958978*x116 + x117 - x118 + x119)) - 39.288260211480577*x63*x92 + x70*x74*x76;
    return f;
}

} // namespace biharm::gen
