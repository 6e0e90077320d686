"""Identity table data (generated transcription; do not edit by hand)."""

SUITES = [
    {'name': 'lemma2.7',
     'context': {'norm': 'symbolic', 'rank': 1, 'momentum': True},
     'entries': [
        {'anchor': 'lemma2.7:sv8H', 'lhs': '-2376*w_-2 w_-2 w_-1 vac+3168*w_-3 w_-1 w_-1 vac-6256*w_-3 w_-3 vac-11799*w_-4 w_-2 vac+30456*w_-5 w_-1 vac+2310*w_-7 vac-9504*w_-1 w_-1 H_-1 vac-6024*w_-3 H_-1 vac-13419*w_-2 H_-2 vac-6516*w_-1 H_-3 vac+11868*H_-5 vac+5040*H_-1 H_-1 vac', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:sv8J', 'lhs': '-29056*w_-1 w_-1 w_-1 w_-1 vac-118960*w_-2 w_-2 w_-1 vac+39040*w_-3 w_-1 w_-1 vac-39480*w_-3 w_-3 vac-32120*w_-4 w_-2 vac+497760*w_-5 w_-1 vac+230360*w_-7 vac+5024*w_-1 w_-1 J_-1 vac-8536*w_-3 J_-1 vac+8939*w_-2 J_-2 vac-2444*w_-1 J_-3 vac+1572*J_-5 vac+560*J_-1 J_-1 vac', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:sv9', 'lhs': '30*J_-6 vac-30*w_-1 J_-4 vac+27*w_-2 J_-3 vac-39*w_-3 J_-2 vac+16*w_-1 w_-1 J_-2 vac+52*w_-4 J_-1 vac-32*w_-2 w_-1 J_-1 vac', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:sv10H', 'lhs': '919328*w_-9 vac-545856*w_-5 w_-1 w_-1 vac-529536*w_-4 w_-4 vac+545352*w_-4 w_-2 w_-1 vac+520160*w_-3 w_-3 w_-1 vac-524968*w_-3 w_-2 w_-2 vac-10240*w_-3 w_-1 w_-1 w_-1 vac+7680*w_-2 w_-2 w_-1 w_-1 vac+1937712*w_-5 H_-1 vac-845376*w_-3 w_-1 H_-1 vac-381048*w_-2 w_-2 H_-1 vac+30720*w_-1 w_-1 w_-1 H_-1 vac-720081*w_-4 H_-2 vac-128280*w_-2 w_-1 H_-2 vac-435576*w_-3 H_-3 vac+234528*w_-1 w_-1 H_-3 vac+345849*w_-2 H_-4 vac-1211160*w_-1 H_-5 vac+2360970*H_-7 vac+70875*H_-2 H_-2 vac+734184*w_-7 w_-1 vac+898766*w_-6 w_-2 vac', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:sv10J', 'lhs': '8192*w_-1 w_-1 w_-1 w_-1 w_-1 vac-2048*w_-1 w_-1 w_-1 J_-1 vac+758496*w_-9 vac-1728*w_-5 w_-3 vac-15232*w_-5 w_-1 w_-1 vac-60848*w_-4 w_-4 vac-134224*w_-4 w_-2 w_-1 vac-6912*w_-3 w_-3 w_-1 vac-136872*w_-3 w_-2 w_-2 vac-112640*w_-3 w_-1 w_-1 w_-1 vac-69280*w_-2 w_-2 w_-1 w_-1 vac-6092*w_-4 J_-2 vac+6272*w_-3 w_-1 J_-1 vac+360*w_-2 w_-2 J_-1 vac+152*w_-2 w_-1 J_-2 vac+1856*w_-3 J_-3 vac+9408*w_-1 w_-1 J_-3 vac+12656*w_-2 J_-4 vac-29968*w_-1 J_-5 vac+43320*J_-7 vac+525*J_-2 J_-2 vac+1309248*w_-7 w_-1 vac+352992*w_-6 w_-2 vac', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:Q4', 'lhs': '2*(p-2)*(-27+54*p-44*p^2+40*p^3)*w_-3 E-12*p*(p-2)*(-3+4*p)*w_-1 w_-1 E-6*p*(p-2)*(-9+2*p)*(-1+2*p)*H_-1 E+(-72*p^3-96*p^2+210*p-90)*w_0 w_-2 E+(120*p^2-48*p+36)*w_0 w_0 w_-1 E+(-48*p-9)*w_0 w_0 w_0 w_0 E', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:Q51', 'lhs': '3*(p-2)*(10*p^2-29*p+32)*(10*p^2-4*p+3)*w_-4 E-12*p*(3*p-4)*(10*p^2-4*p+3)*w_-2 w_-1 E-3*(p-8)*(p-2)*(2*p-1)*(10*p^2-4*p+3)*H_-2 E+8*(2*p-7)*(15*p^3-22*p^2+8*p-6)*w_0 w_-3 E+24*p^2*(8*p-9)*w_0 w_-1 w_-1 E-12*(p-2)*(2*p-1)*(6*p^2-5*p+6)*w_0 H_-1 E-6*(2*p^3-32*p^2+29*p+12)*w_0 w_0 w_-2 E-6*(8*p-9)*w_0 w_0 w_0 w_0 w_0 E', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:Q52', 'lhs': '3*(p-2)*(10*p^2-29*p+32)*(12*p^3+16*p^2-35*p+15)*w_-4 E-12*p*(3*p-4)*(12*p^3+16*p^2-35*p+15)*w_-2 w_-1 E-3*(p-8)*(p-2)*(2*p-1)*(12*p^3+16*p^2-35*p+15)*H_-2 E+2*(136*p^5-316*p^4-1266*p^3+3409*p^2-2470*p+624)*w_0 w_-3 E+12*p*(20*p^3-3*p^2-44*p+24)*w_0 w_-1 w_-1 E-6*(p-2)*(2*p-1)*(14*p^3+21*p^2-74*p+60)*w_0 H_-1 E-12*(2*p^3-32*p^2+29*p+12)*w_0 w_0 w_0 w_-1 E-3*(16*p^2+61*p-102)*w_0 w_0 w_0 w_0 w_0 E', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
        {'anchor': 'lemma2.7:Q6', 'lhs': '2*(3696*p^8-22564*p^7+66284*p^6-84937*p^5+56207*p^4-91528*p^3+11774*p^2+29190*p-13500)*w_-5 E-4*p*(352*p^6+2152*p^5-8282*p^4+7951*p^3-11696*p^2+6304*p-1542)*w_-3 w_-1 E-3*p*(1584*p^6-5572*p^5+6456*p^4-6877*p^3+5214*p^2-3040*p+642)*w_-2 w_-2 E+720*p^3*(p-2)*(4*p-1)*w_-1 w_-1 w_-1 E-24*p*(p-2)*(2*p-1)*(44*p^4-98*p^3+157*p^2-88*p+48)*w_-1 H_-1 E-3*(p-2)*(2*p-25)*(2*p-1)^2*(44*p^4-13*p^3+62*p^2-48*p+18)*H_-3 E+3*(1760*p^7-9382*p^6+1391*p^5+28130*p^4-14380*p^3+29762*p^2-25851*p+7650)*w_0 w_-4 E+12*p*(352*p^5-1459*p^4+2396*p^3-2894*p^2+1254*p-225)*w_0 w_-2 w_-1 E-3*(p-2)*(2*p-1)*(352*p^5+101*p^4+86*p^3-614*p^2+804*p-225)*w_0 H_-2 E+12*(88*p^6+1104*p^5-4136*p^4+3714*p^3-3944*p^2+2670*p-675)*w_0 w_0 w_-3 E-6*(352*p^5-1099*p^4+686*p^3-689*p^2+804*p-225)*w_0 w_0 w_0 w_-2 E-90*(p-2)*(4*p-1)*w_0 w_0 w_0 w_0 w_0 w_0 E', 'rhs': '0', 'note': 'relation vector; the source also cites these as P^(..)'},
     ]},
    {'name': 'norm2-relations',
     'context': {'norm': '2', 'rank': 1, 'momentum': True},
     'entries': [
        {'anchor': 'eq:6omega2E4omega0omega1E-1', 'lhs': '6*w_-2 E-4*w_0 w_-1 E+w_0 w_0 w_0 E', 'rhs': '0'},
        {'anchor': 'eq:6omega2E4omega0omega1E-2', 'lhs': '180*w_-3 E-48*w_-1 w_-1 E+72*H_-1 E-63*w_0 (H_0E)+8*w_0 w_0 w_-1 E+w_0 w_0 w_0 w_0 E', 'rhs': '0'},
        {'anchor': 'eq:6omega2E4omega0omega1E-3', 'lhs': '9450*w_-4 E-900*w_-1 (H_0E)+6750*H_-2 E-768*w_0 w_-1 w_-1 E-3168*w_0 H_-1 E+297*w_0 w_0 (H_0E)+128*w_0 w_0 w_0 w_-1 E+16*w_0 w_0 w_0 w_0 w_0 E', 'rhs': '0'},
        {'anchor': 'eq:6omega2E4omega0omega1E-4', 'lhs': '584199000*w_-6 E-117085500*H_-4 E+98941500*w_-3 (H_0E)-27594000*w_-1 w_-1 (H_0E)+34587000*H_-1 (H_0E)-13132800*w_0 w_-1 w_-1 w_-1 E-60739200*w_0 w_-1 H_-1 E+277223400*w_0 H_-3 E-85188900*w_0 w_-2 (H_0E)+206053320*w_0 w_0 w_-4 E-8524040*w_0 w_0 w_-1 (H_0E)-27546608*w_0 w_0 w_0 w_-3 E-51990312*w_0 w_0 w_0 H_-1 E+17161013*w_0 w_0 w_0 w_0 (H_0E)-820800*w_0 w_0 w_0 w_0 w_0 w_-1 E+410400*w_0 w_0 w_0 w_0 w_0 w_0 w_0 E', 'rhs': '0'},
     ]},
    {'name': 'norm1-2-relations',
     'context': {'norm': '1/2', 'rank': 1, 'momentum': True},
     'entries': [
        {'anchor': 'eq:norm1-2-0', 'lhs': 'w_-1 E-w_0 w_0 E', 'rhs': '0'},
        {'anchor': 'eq:norm1-2-1', 'lhs': 'H_0 E', 'rhs': '(-2)/(3)*w_-2 E+(4)/(3)*w_0 (H_1E)'},
        {'anchor': 'eq:norm1-2-2', 'lhs': '8*w_-3 E+12*H_-1 E+3*w_-1 (H_1E)+4*w_0 w_-2 E-11*w_0 w_0 (H_1E)', 'rhs': '0'},
     ]},
    {'name': 'sec5-relations',
     'context': {'norm': 'symbolic', 'rank': 4, 'momentum': False},
     'entries': [
        {'anchor': 'eq:s11-3', 'lhs': '6*w[1]_-2 S[1,2](1,1)+2*w[2]_-2 S[1,2](1,1)-4*w_0 w[1]_-1 S[1,2](1,1)+w_0 w_0 w_0 S[1,2](1,1)+4*w[1]_-1 S[1,2](1,2)-4*w[2]_-1 S[1,2](1,2)-3*w_0 w_0 S[1,2](1,2)+6*w_0 S[1,2](1,3)', 'rhs': '0'},
        {'anchor': 'eq:s11-4-1', 'lhs': '32*w[1]_-3 S[1,2](1,1)-24*H[1]_-1 S[1,2](1,1)-8*w[2]_-3 S[1,2](1,1)+24*H[2]_-1 S[1,2](1,1)-120*w_0 w[1]_-2 S[1,2](1,1)+36*w_0 w[2]_-2 S[1,2](1,1)+72*w_0 w_0 w[1]_-1 S[1,2](1,1)-9*w_0 w_0 w_0 w_0 S[1,2](1,1)+12*w[1]_-2 S[1,2](1,2)+12*w[2]_-2 S[1,2](1,2)-72*w_0 w[1]_-1 S[1,2](1,2)-72*w_0 w[2]_-1 S[1,2](1,2)+18*w_0 w_0 w_0 S[1,2](1,2)', 'rhs': '0'},
        {'anchor': 'eq:s11-4-2', 'lhs': '8*w[2]_-3 S[1,2](1,1)-24*H[2]_-1 S[1,2](1,1)+54*w_0 w[1]_-2 S[1,2](1,1)-36*w_0 w[2]_-2 S[1,2](1,1)-36*w_0 w_0 w[1]_-1 S[1,2](1,1)+9*w_0 w_0 w_0 w_0 S[1,2](1,1)+54*w[1]_-2 S[1,2](1,2)-12*w[2]_-2 S[1,2](1,2)+72*w_0 w[2]_-1 S[1,2](1,2)-18*w_0 w_0 w_0 S[1,2](1,2)+72*w[1]_-1 S[1,2](1,3)', 'rhs': '0'},
        {'anchor': 'eq:s11-4-3', 'lhs': '14*w[2]_-3 S[1,2](1,1)+12*H[2]_-1 S[1,2](1,1)-3*w[2]_-2 S[1,2](1,2)-36*w[2]_-1 S[1,2](1,3)', 'rhs': '0'},
     ]},
    {'name': 'sec6-generic',
     'context': {'norm': 'symbolic', 'rank': 4, 'momentum': True},
     'entries': [
        {'anchor': 'eq:(mn-1)(2mn2-mn+2)Sij(1,1)-2E-1', 'lhs': '2*(2*p-1)*(p-1)^2*S[2,1](1,1)_-2 E-4*(p-1)^2*w[1]_-1 S[2,1](1,1)_0 E-(p+2)*(2*p-1)*w_0 S[2,1](1,1)_-1 E+(4*p-1)*w_0 w_0 S[2,1](1,1)_0 E-p*(p-1)*(2*p-5)*S[2,1](2,1)_-1 E', 'rhs': '0', 'note': 'source prints coefficients (p-1)(2p^2-p+2), -4(p-1)^2 on the i-indexed quadratic, and +p(p-1)(2p-5); that combination is nonzero (terms are linearly independent).  Entry uses the unique verified relation on the same terms.'},
        {'anchor': 'eq:(mn-1)(2mn2-mn+2)Sij(1,1)-2E-2', 'lhs': 'p*(4*p-1)*S[2,1](1,1)_-3 E-2*p*(4*p-1)*w[2]_-1 S[2,1](1,1)_-1 E+(p-3)*(4*p-1)*w[2]_-2 (S[2,1](1,1)_0E)-(p+1)*w_0 S[2,1](1,1)_-2 E+2*(4*p-1)*w_0 w[2]_-1 (S[2,1](1,1)_0E)-2*w_0 w[1]_-1 (S[2,1](1,1)_0E)+w_0 w_0 S[2,1](1,1)_-1 E-p*(4*p-1)*S[2,1](1,2)_-2 E+3*p*w_0 S[2,1](1,2)_-1 E+p*(4*p-1)*S[2,1](1,3)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:(mn-1)(2mn2-mn+2)Sij(1,1)-2E-3', 'lhs': '3*p*(p-1)*(4*p-1)*S[2,1](1,1)_-3 E-4*p*(p-2)*(4*p-1)*w[2]_-1 S[2,1](1,1)_-1 E+2*(p-3)*(p-2)*(4*p-1)*w[2]_-2 (S[2,1](1,1)_0E)+3*(p-1)*(4*p-1)*w[1]_-2 (S[2,1](1,1)_0E)-6*(p-1)*(p+1)*w_0 S[2,1](1,1)_-2 E+4*(p-2)*(4*p-1)*w_0 w[2]_-1 (S[2,1](1,1)_0E)-12*(p-1)*w_0 w[1]_-1 (S[2,1](1,1)_0E)+6*(p-1)*w_0 w_0 S[2,1](1,1)_-1 E-3*(p-1)^2*(4*p-1)*S[2,1](1,2)_-2 E+3*(p-1)*(2*p+1)*w_0 S[2,1](1,2)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:(mn-1)(2mn2-mn+2)Sij(1,1)-2E-5', 'lhs': '72*p*(p-1)*w[2]_-1 S[2,1](1,1)_-2 E+3*p*(p+2)*(2*p-1)*w[2]_-2 S[2,1](1,1)_-1 E-2*(14*p^3+p^2-8*p-16)*w[2]_-3 (S[2,1](1,1)_0E)_-1 vac-12*(p-1)*(p+2)*(2*p-1)*H[2]_-1 (S[2,1](1,1)_0E)_-1 vac+72*p*(p-1)*w[2]_-1 w[1]_-1 (S[2,1](1,1)_0E)_-1 vac-3*(2*p^2-21*p+22)*w_0 w[2]_-2 (S[2,1](1,1)_0E)_-1 vac-36*(p-1)*w_0 w_0 w[2]_-1 (S[2,1](1,1)_0E)_-1 vac-36*p*(p-1)*(2*p+1)*w[2]_-1 S[2,1](1,2)_-1 E', 'rhs': '0'},
     ]},
    {'name': 'sec6-norm2',
     'context': {'norm': '2', 'rank': 4, 'momentum': True},
     'entries': [
        {'anchor': 'eq:8Si1(11)2E-4omega[1]-1-0', 'lhs': '8*S[2,1](1,1)_-2 E-4*w[1]_-1 (S[2,1](1,1)_0E)-12*w_0 S[2,1](1,1)_-1 E+7*w_0 w_0 (S[2,1](1,1)_0E)-2*S[2,1](1,2)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:8Si1(11)2E-4omega[1]-1-1', 'lhs': '198*S[2,1](1,1)_-4 E-1158*w[2]_-2 S[2,1](1,1)_-1 E-4444*w[2]_-3 (S[2,1](1,1)_0E)-1158*H[2]_-1 (S[2,1](1,1)_0E)-180*w[1]_-1 S[2,1](1,1)_-2 E+2448*w[2]_-1 w[1]_-1 (S[2,1](1,1)_0E)+270*w[1]_-2 S[2,1](1,1)_-1 E-810*H[1]_-1 (S[2,1](1,1)_0E)-621*S[2,1](1,1)_-1 (H_0E)-180*w_0 S[2,1](1,1)_-3 E+2415*w_0 w[2]_-2 (S[2,1](1,1)_0E)-135*w_0 w[1]_-2 (S[2,1](1,1)_0E)+45*w_0 w_0 S[2,1](1,1)_-2 E-612*w_0 w_0 w[2]_-1 (S[2,1](1,1)_0E)+342*S[2,1](1,2)_-3 E-3672*w[2]_-1 S[2,1](1,2)_-1 E+1782*w_0 S[2,1](1,3)_-1 E', 'rhs': '0'},
     ]},
    {'name': 'sec6-norm1-2',
     'context': {'norm': '1/2', 'rank': 4, 'momentum': True},
     'entries': [
        {'anchor': 'eq:2Si1(1,1)-3ExB-2omega[1]-1-0', 'lhs': 'S[2,1](1,1)_-2 E+w[1]_-1 (S[2,1](1,1)_0E)-w_0 w_0 (S[2,1](1,1)_0E)-S[2,1](1,2)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:2Si1(1,1)-3ExB-2omega[1]-1-1', 'lhs': '2*S[2,1](1,1)_-3 E-2*w[2]_-1 S[2,1](1,1)_-1 E-5*w[2]_-2 (S[2,1](1,1)_0E)-w[1]_-1 S[2,1](1,1)_-1 E-5*w_0 S[2,1](1,1)_-2 E+4*w_0 w[2]_-1 (S[2,1](1,1)_0E)-4*w_0 w[1]_-1 (S[2,1](1,1)_0E)+3*w_0 w_0 S[2,1](1,1)_-1 E+3*w_0 S[2,1](1,2)_-1 E+S[2,1](1,3)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:8omega[1]-3ExB+12', 'lhs': '8*w[1]_-3 E+12*H[1]_-1 E+3*w[1]_-1 (H[1]_1E)+4*w_0 w[1]_-2 E-11*w_0 w_0 (H[1]_1E)', 'rhs': '0'},
        {'anchor': 'eq:2Si1(1,1)-3ExB-2omega[1]-1-2', 'lhs': '15*S[2,1](1,1)_-3 E-22*w[2]_-1 S[2,1](1,1)_-1 E-55*w[2]_-2 (S[2,1](1,1)_0E)-9*w[1]_-1 S[2,1](1,1)_-1 E-6*S[2,1](1,1)_-1 (H[1]_1E)-27*w_0 S[2,1](1,1)_-2 E+44*w_0 w[2]_-1 (S[2,1](1,1)_0E)-12*w_0 w[1]_-1 (S[2,1](1,1)_0E)+15*w_0 w_0 S[2,1](1,1)_-1 E+15*w_0 S[2,1](1,2)_-1 E', 'rhs': '0'},
     ]},
    {'name': 'sec6-norm1',
     'context': {'norm': '1', 'rank': 4, 'momentum': True},
     'entries': [
        {'anchor': 'eq:=Si1(1,1)-2ExB-Si1(1,2)-1ExB-1', 'lhs': 'S[2,1](1,1)_-1 E-w_0 (S[2,1](1,1)_0E)', 'rhs': '0'},
        {'anchor': 'eq:=Si1(1,1)-2ExB-Si1(1,2)-1ExB-2', 'lhs': 'S[2,1](1,1)_-2 E-S[2,1](1,2)_-1 E+w_0 (S[2,1](1,2)_0E)', 'rhs': '0'},
        {'anchor': 'eq:=Si1(1,1)-2ExB-Si1(1,2)-1ExB-3', 'lhs': '27*w[1]_-2 (S[2,1](1,1)_0E)-8*w_0 S[2,1](1,1)_-2 E-2*w_0 w[1]_-1 (S[2,1](1,1)_0E)+w_0 w_0 w_0 (S[2,1](1,1)_0E)+21*S[2,1](1,2)_-2 E-12*w[1]_-1 (S[2,1](1,2)_0E)-18*w_0 S[2,1](1,2)_-1 E-15*S[2,1](1,3)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:=Si1(1,1)-2ExB-Si1(1,2)-1ExB-4', 'lhs': 'S[2,1](1,1)_-3 E-9*w[1]_-2 (S[2,1](1,1)_0E)+2*w_0 S[2,1](1,1)_-2 E-8*S[2,1](1,2)_-2 E+4*w[1]_-1 (S[2,1](1,2)_0E)+7*w_0 S[2,1](1,2)_-1 E+6*S[2,1](1,3)_-1 E', 'rhs': '0'},
     ]},
    {'name': 'sec6-norm0',
     'context': {'norm': '0', 'rank': 4, 'momentum': True},
     'entries': [
        {'anchor': 'eq:z147z121omega22E-1', 'lhs': 'z^4*(7*z^2+1)*w[2]_-2 E-z^2*(7*z^4-z^2-4)*w[1]_-2 E+2*z^4*(3*z-1)*(3*z+1)*w_0 w[2]_-1 E-2*z^2*(9*z^4+z^2+2)*w_0 w[1]_-1 E+z^2*(3*z-1)*(3*z+1)*w_0 w_0 w_0 E-z^2*(7*z^4+5*z^2+2)*I*S[2,1](1,1)_-2 E-2*z^2*(3*z^2-1)*(3*z^2+1)*I*w_0 S[2,1](1,1)_-1 E+10*z^4*I*S[2,1](1,2)_-1 E+4*z^2*w[2]_-1 (w[1]_0E)+4*z^2*w[1]_-1 (w[1]_0E)+2*z^2*w_0 w_0 (w[1]_0E)_-1 vac', 'rhs': '0'},
        {'anchor': 'eq:z147z121omega22E-2', 'lhs': '-2*z^4*(2*z^2+1)^2*(7*z^2+1)*w[2]_-3 E+2*z^2*(7*z^2+1)*(4*z^6-4*z^4+9*z^2+3)*w[1]_-3 E-8*z^2*(7*z^2+1)*(2*z^4+1)*w[1]_-1 w[1]_-1 E+12*z^2*(7*z^2+1)*(2*z^4+1)*H[1]_-1 E+2*z^2*(16*z^6-27*z^2-4)*w_0 w[1]_-2 E+8*z^6*(8*z^4-17*z^2-3)*w_0 w_0 w[2]_-1 E-8*z^2*(8*z^8-9*z^6-11*z^4-8*z^2-1)*w_0 w_0 w[1]_-1 E+4*z^4*(8*z^4-17*z^2-3)*w_0 w_0 w_0 w_0 E+z^2*(7*z^2+1)*(8*z^6+4*z^4+5*z^2-2)*I*S[2,1](1,1)_-3 E-2*z^4*(2*z^2+1)*(7*z^2+1)*I*w[2]_-1 S[2,1](1,1)_-1 E-2*z^2*(7*z^2+1)*(6*z^4+z^2+2)*I*w[1]_-1 S[2,1](1,1)_-1 E-z^2*(8*z^6+8*z^4-19*z^2-3)*I*w_0 S[2,1](1,1)_-2 E-z^2*(2*z^2+1)*(32*z^6-68*z^4-5*z^2+1)*I*w_0 w_0 S[2,1](1,1)_-1 E-3*z^4*(4*z^2+1)*(7*z^2+1)*I*S[2,1](1,2)_-2 E+z^2*(48*z^6+5*z^2+1)*I*w_0 S[2,1](1,2)_-1 E+2*z^2*(7*z^2+1)*(12*z^4+5*z^2+1)*I*S[2,1](1,3)_-1 E-z^2*(7*z^2+1)*(8*z^2+1)*w[2]_-2 (w[1]_0E)-(7*z^2+1)*(8*z^4-5*z^2+6)*w[1]_-2 (w[1]_0E)+2*z^2*(32*z^4-z^2-1)*w_0 w[2]_-1 (w[1]_0E)+2*(32*z^6-15*z^4+11*z^2+2)*w_0 w[1]_-1 (w[1]_0E)+(8*z^2+1)*(4*z^4-5*z^2-1)*w_0 w_0 w_0 (w[1]_0E)', 'rhs': '0'},
        {'anchor': 'eq:z147z121omega22E-3', 'lhs': '8*z^6*(2*z^2+1)^2*(7*z^2+1)*w[2]_-1 w[2]_-1 E+4*z^2*(7*z^2+1)*(52*z^6+38*z^4+36*z^2+9)*w[1]_-3 E-8*z^2*(7*z^2+1)*(4*z^8+12*z^6+35*z^4+15*z^2+6)*w[1]_-1 w[1]_-1 E+12*z^2*(7*z^2+1)*(8*z^6+34*z^4+15*z^2+6)*H[1]_-1 E+z^2*(32*z^8-164*z^6-120*z^4-151*z^2-8)*w_0 w[1]_-2 E-8*z^4*(160*z^8+26*z^6+39*z^4+7*z^2+2)*w_0 w_0 w[2]_-1 E+4*z^2*(320*z^10+428*z^8+442*z^6+200*z^4+57*z^2+2)*w_0 w_0 w[1]_-1 E-10*z^2*(64*z^8+16*z^6+22*z^4+5*z^2+1)*w_0 w_0 w_0 w_0 E+2*z^2*(7*z^2+1)*(2*z^6-29*z^4-9*z^2-6)*I*S[2,1](1,1)_-3 E-4*z^4*(2*z^2+1)*(7*z^2+1)*(4*z^4+4*z^2+3)*I*w[2]_-1 S[2,1](1,1)_-1 E-8*z^2*(7*z^2+1)*(4*z^8+10*z^6+22*z^4+9*z^2+3)*I*w[1]_-1 S[2,1](1,1)_-1 E-z^2*(64*z^8+80*z^6+138*z^4+z^2+2)*I*w_0 S[2,1](1,1)_-2 E+2*z^2*(2*z^2+1)*(320*z^8+80*z^6+166*z^4+47*z^2+7)*I*w_0 w_0 S[2,1](1,1)_-1 E+2*z^6*(7*z^2+1)*(34*z^2+5)*I*S[2,1](1,2)_-2 E+z^2*(160*z^8+848*z^6+494*z^4+127*z^2+6)*I*w_0 S[2,1](1,2)_-1 E+6*z^2*(7*z^2+1)*(16*z^6+38*z^4+15*z^2+2)*I*S[2,1](1,3)_-1 E+6*z^2*(7*z^2+1)*(2*z^4-5*z^2-1)*w[2]_-2 (w[1]_0E)+6*(7*z^2+1)*(2*z^6-23*z^4-10*z^2-6)*w[1]_-2 (w[1]_0E)-2*z^2*(24*z^6-226*z^4-87*z^2-14)*w_0 w[2]_-1 (w[1]_0E)-2*(24*z^8-478*z^6-249*z^4-116*z^2-12)*w_0 w[1]_-1 (w[1]_0E)-(640*z^8+464*z^6+314*z^4+73*z^2+6)*w_0 w_0 w_0 (w[1]_0E)', 'rhs': '0'},
        {'anchor': 'eq:z147z121omega22E-4', 'lhs': '-12*z^4*(2*z^2+1)^2*(7*z^2+1)*H[2]_-1 E-8*z^2*(2*z^2+3)*(5*z^2+1)*(7*z^2+1)*w[1]_-3 E+8*z^2*(7*z^2+1)*(8*z^4+18*z^2+13)*w[1]_-1 w[1]_-1 E+12*z^2*(7*z^2+1)*(4*z^6-4*z^4-17*z^2-13)*H[1]_-1 E-z^2*(512*z^6+180*z^4-144*z^2+7)*w_0 w[1]_-2 E+16*z^4*(62*z^6+79*z^4+15*z^2+3)*w_0 w_0 w[2]_-1 E-4*z^2*(248*z^8+564*z^6+424*z^4+142*z^2+5)*w_0 w_0 w[1]_-1 E+8*z^2*(62*z^6+79*z^4+15*z^2+3)*w_0 w_0 w_0 w_0 E+2*z^2*(4*z^2+11)*(7*z^2+1)*(2*z^4+3*z^2+2)*I*S[2,1](1,1)_-3 E+8*z^4*(2*z^2+1)*(7*z^2+1)*I*w[2]_-1 S[2,1](1,1)_-1 E+4*z^2*(7*z^2+1)*(12*z^4+20*z^2+13)*I*w[1]_-1 S[2,1](1,1)_-1 E-z^2*(208*z^6+400*z^4+238*z^2+15)*I*w_0 S[2,1](1,1)_-2 E-4*z^2*(2*z^2+1)*(124*z^6+158*z^4+23*z^2+5)*I*w_0 w_0 S[2,1](1,1)_-1 E-6*z^2*(7*z^2+1)*(8*z^6+18*z^4+15*z^2+3)*I*S[2,1](1,2)_-2 E-z^2*(96*z^6+48*z^4+50*z^2-5)*I*w_0 S[2,1](1,2)_-1 E+2*z^2*(7*z^2+1)*(48*z^6-26*z^2-13)*I*S[2,1](1,3)_-1 E-2*z^2*(2*z^2+7)*(7*z^2+1)*w[2]_-2 (w[1]_0E)-2*(7*z^2+1)*(2*z^4-35*z^2-39)*w[1]_-2 (w[1]_0E)-2*z^2*(8*z^4-34*z^2+11)*w_0 w[2]_-1 (w[1]_0E)-2*(8*z^6+162*z^4+221*z^2+26)*w_0 w[1]_-1 (w[1]_0E)+(496*z^6+624*z^4+154*z^2+13)*w_0 w_0 w_0 (w[1]_0E)', 'rhs': '0', 'note': "the printed last line juxtaposes 496z^6+624z^4+154z^2+13 with the cubic term without grouping; read as that term's coefficient the relation vanishes, so the printed polynomial is the true coefficient"},
        {'anchor': 'eq:z147z121omega22E-5', 'lhs': '144*z^4*(2*z^2+1)*(7*z^2+1)*w[2]_-1 w[1]_-1 E+8*z^2*(7*z^2+1)*(80*z^4+61*z^2+18)*w[1]_-3 E-24*z^2*(7*z^2+1)*(12*z^4+34*z^2+9)*w[1]_-1 w[1]_-1 E+12*z^2*(7*z^2+1)*(32*z^4+100*z^2+27)*H[1]_-1 E+3*z^2*(8*z^2+3)*(96*z^4-74*z^2-11)*w_0 w[1]_-2 E-24*z^4*(16*z^2+3)*(16*z^4+5*z^2+1)*w_0 w_0 w[2]_-1 E+12*z^2*(512*z^8+768*z^6+530*z^4+130*z^2+9)*w_0 w_0 w[1]_-1 E-12*z^2*(16*z^2+3)*(16*z^4+5*z^2+1)*w_0 w_0 w_0 w_0 E-6*z^2*(z^2+2)*(7*z^2+1)*(16*z^2+3)*I*S[2,1](1,1)_-3 E-12*z^2*(7*z^2+1)*(24*z^4+40*z^2+9)*I*w[1]_-1 S[2,1](1,1)_-1 E+3*z^2*(16*z^2+3)*(16*z^4+20*z^2+1)*I*w_0 S[2,1](1,1)_-2 E+12*z^2*(2*z^2+1)*(16*z^2+3)*(16*z^4+5*z^2+1)*I*w_0 w_0 S[2,1](1,1)_-1 E+6*z^2*(3*z^2+1)*(7*z^2+1)*(16*z^2+3)*I*S[2,1](1,2)_-2 E+3*z^2*(16*z^2+3)*(16*z^4+20*z^2+1)*I*w_0 S[2,1](1,2)_-1 E+6*z^2*(4*z^2+3)*(7*z^2+1)*(16*z^2+3)*I*S[2,1](1,3)_-1 E+6*z^2*(7*z^2+1)*(16*z^2+3)*w[2]_-2 (w[1]_0E)+6*(7*z^2+1)*(16*z^4-81*z^2-27)*w[1]_-2 (w[1]_0E)-6*z^2*(8*z^2-1)*(16*z^2+3)*w_0 w[2]_-1 (w[1]_0E)-6*(128*z^6-384*z^4-185*z^2-18)*w_0 w[1]_-1 (w[1]_0E)-3*(4*z^2+1)*(16*z^2+3)^2*w_0 w_0 w_0 (w[1]_0E)', 'rhs': '0'},
        {'anchor': 'eq:-2z12omega21Sk1110E-1', 'lhs': '-2*z^2*w[2]_-1 (S[3,1](1,1)_0E)-2*z^2*w[1]_-1 (S[3,1](1,1)_0E)-z^2*w_0 w_0 (S[3,1](1,1)_0E)-z^2*(z^2+1)*S[3,1](1,1)_-2 E+z^2*(z^2+1)*w_0 S[3,1](1,1)_-1 E+3*z^4*S[3,1](1,2)_-1 E-z^2*(z-1)*(z+1)*I*S[3,2](1,1)_-2 E+z^2*(z-1)*(z+1)*I*w_0 S[3,2](1,1)_-1 E+3*z^4*I*S[3,2](1,2)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:-2z12omega21Sk1110E-2', 'lhs': '-12*z^2*(z-1)*(z+1)*(4*z^4+26*z^2+3)*w[3]_-2 (S[3,1](1,1)_0E)+6*z^2*(z-1)*(z+1)*(4*z^4+8*z^2+1)*w[2]_-2 (S[3,1](1,1)_0E)+6*z^2*(z-1)*(z+1)*(4*z^4+8*z^2+1)*w[1]_-2 (S[3,1](1,1)_0E)+8*z^2*(z-1)*(z+1)*(4*z^4+26*z^2+3)*w_0 w[3]_-1 (S[3,1](1,1)_0E)-12*z^2*(4*z^6+10*z^4-9*z^2-2)*w_0 w[2]_-1 (S[3,1](1,1)_0E)-12*z^2*(4*z^6+10*z^4-9*z^2-2)*w_0 w[1]_-1 (S[3,1](1,1)_0E)-6*z^2*(20*z^4-14*z^2-3)*w_0 w_0 w_0 (S[3,1](1,1)_0E)-8*z^4*(z-1)*(z+1)*(4*z^4+26*z^2+3)*w[3]_-1 S[3,1](1,1)_-1 E+6*z^4*(z-1)*(z+1)*(2*z^2-1)*(2*z^2+5)*S[3,1](1,1)_-3 E+24*z^4*(z-1)*(z+1)*(2*z^4+4*z^2+1)*w[2]_-1 S[3,1](1,1)_-1 E+48*z^6*(z-1)*(z+1)*(z^2+1)*w[1]_-1 S[3,1](1,1)_-1 E+12*z^2*(2*z^2-1)*(z^4-3*z^2-1)*w_0 S[3,1](1,1)_-2 E+12*z^2*(10*z^6-2*z^4-4*z^2-1)*w_0 w_0 S[3,1](1,1)_-1 E-6*z^2*(z-1)*(z+1)*(2*z^2-1)*(4*z^2+1)*S[3,1](1,2)_-2 E+6*z^2*(2*z^2-1)*(10*z^4-1)*w_0 S[3,1](1,2)_-1 E-8*z^4*(z-1)*(z+1)*(4*z^4+26*z^2+3)*I*w[3]_-1 S[3,2](1,1)_-1 E+6*z^2*(z-1)*(z+1)*(2*z^2+1)*(2*z^4+7*z^2+2)*I*S[3,2](1,1)_-3 E+12*z^4*(z-1)*(z+1)*(4*z^4+6*z^2+1)*I*w[2]_-1 S[3,2](1,1)_-1 E+12*z^4*(z-1)*(z+1)*(4*z^4+2*z^2-1)*I*w[1]_-1 S[3,2](1,1)_-1 E+6*z^2*(z-1)*(z+1)*(20*z^4-2*z^2-1)*I*w_0 w_0 S[3,2](1,1)_-1 E+18*z^4*(2*z^2-1)*(2*z^2+1)*I*w_0 S[3,2](1,2)_-1 E-12*z^4*(z-1)*(z+1)*(2*z^2+1)*I*S[3,2](1,3)_-1 E', 'rhs': '0'},
        {'anchor': 'eq:R_1+R_2+R_3', 'lhs': '(-120*z^4*(2*z^2+1)*(1536*z^10-2336*z^8+2764*z^6-964*z^4-61*z^2+54)*H[2]_-1 (S[3,1](1,1)_0E)+8*z^2*(86016*z^14-298496*z^12+331728*z^10-120784*z^8-1232*z^6+6360*z^4-559*z^2+108)*w[2]_-3 (S[3,1](1,1)_0E)+16*z^2*(21504*z^14-37824*z^12+38184*z^10-13924*z^8-394*z^6+379*z^4+31*z^2+54)*w[2]_-1 w[2]_-1 (S[3,1](1,1)_0E)-36*z^6*(16*z^2-3)*(3072*z^10-4672*z^8+5592*z^6-868*z^4-30*z^2-61)*H[3]_-1 (S[3,1](1,1)_0E)+16*z^2*(21504*z^14-37824*z^12+38184*z^10-13924*z^8-394*z^6+379*z^4+31*z^2+54)*w[2]_-1 w[1]_-1 (S[3,1](1,1)_0E)+72*z^4*(2*z^2-9)*(2*z^2-1)^2*(16*z^2-3)*(32*z^4-6*z^2-3)*w[1]_-3 (S[3,1](1,1)_0E)-z^2*(16*z^2-3)*(236544*z^14-221504*z^12+306744*z^10+57724*z^8-113190*z^6+23743*z^4+12420*z^2-1080)*w_0 w[3]_-2 (S[3,1](1,1)_0E)-8*z^2*(70656*z^14-290496*z^12+347928*z^10-138404*z^8-3002*z^6+7745*z^4-829*z^2+108)*w_0 w[2]_-2 (S[3,1](1,1)_0E)-24*z^4*(16*z^2-3)*(768*z^10-4528*z^8+5008*z^6-1312*z^4-360*z^2+81)*w_0 w[1]_-2 (S[3,1](1,1)_0E)+10*z^2*(16*z^2-3)*(15360*z^14-14144*z^12+19704*z^10+3964*z^8-7542*z^6+1591*z^4+828*z^2-72)*w_0 w_0 w[3]_-1 (S[3,1](1,1)_0E)+16*z^2*(6144*z^14-69504*z^12+106464*z^10-46880*z^8-6002*z^6+2981*z^4-187*z^2+27)*w_0 w_0 w[2]_-1 (S[3,1](1,1)_0E)-72*z^4*(16*z^2-3)*(768*z^8-1136*z^6+324*z^4+164*z^2-9)*w_0 w_0 w[1]_-1 (S[3,1](1,1)_0E)-36*z^2*(2*z^2+1)*(16*z^2-3)*(512*z^8-800*z^6+256*z^4+48*z^2-5)*w_0 w_0 w_0 w_0 (S[3,1](1,1)_0E)+z^4*(16*z^2-3)*(82944*z^14-239808*z^12+351112*z^10-190300*z^8+44182*z^6+2409*z^4-2916*z^2+216)*w[3]_-2 S[3,1](1,1)_-1 E-2*z^4*(16*z^2-3)*(76800*z^14-230464*z^12+339928*z^10-188564*z^8+44242*z^6+2531*z^4-2916*z^2+216)*w[3]_-1 S[3,1](1,1)_-2 E)+(-144*z^4*(2*z^2-1)*(16*z^2-3)*(832*z^10-1548*z^8+1390*z^6-375*z^4-32*z^2+18)*S[3,1](1,1)_-4 E-8*z^2*(43008*z^16-97152*z^14+49296*z^12-48056*z^10+12140*z^8+5706*z^6-1382*z^4-85*z^2-54)*w[2]_-1 S[3,1](1,1)_-2 E+8*z^2*(21504*z^16-200640*z^14+161640*z^12+500*z^10-22958*z^8+1605*z^6+410*z^4+85*z^2+54)*w[2]_-2 S[3,1](1,1)_-1 E-48*z^6*(2*z^2-1)*(16*z^2-3)*(384*z^8-760*z^6+310*z^4-10*z^2-9)*w[1]_-1 S[3,1](1,1)_-2 E-72*z^4*(2*z^2-1)^2*(2*z^2+1)*(16*z^2-3)*(32*z^4-6*z^2-3)*w[1]_-2 S[3,1](1,1)_-1 E-10*z^4*(16*z^2-3)*(15360*z^14-14144*z^12+19704*z^10+3964*z^8-7542*z^6+1591*z^4+828*z^2-72)*w_0 w[3]_-1 S[3,1](1,1)_-1 E+144*z^4*(2*z^2-1)^2*(16*z^2-3)*(32*z^8-114*z^6+156*z^4-19*z^2-6)*w_0 S[3,1](1,1)_-3 E-8*z^2*(12288*z^16-117504*z^14+221184*z^12-95896*z^10-19988*z^8+7728*z^6-400*z^4+85*z^2+54)*w_0 w[2]_-1 S[3,1](1,1)_-1 E+96*z^6*(16*z^2-3)*(192*z^8-364*z^6+136*z^4+41*z^2-6)*w_0 w[1]_-1 S[3,1](1,1)_-1 E+72*z^4*(16*z^2-3)*(256*z^10-656*z^8+256*z^6-24*z^4-10*z^2-3)*w_0 w_0 S[3,1](1,1)_-2 E+24*z^4*(16*z^2-3)*(1536*z^10-864*z^8-1408*z^6+742*z^4+221*z^2-9)*w_0 w_0 w_0 S[3,1](1,1)_-1 E+2*z^4*(16*z^2-3)*(76800*z^14-230464*z^12+339928*z^10-188564*z^8+44242*z^6+2531*z^4-2916*z^2+216)*w[3]_-1 S[3,1](1,2)_-1 E+288*z^4*(2*z^2-1)*(16*z^2-3)*(256*z^10-408*z^8+303*z^6-62*z^4-18*z^2+6)*S[3,1](1,2)_-3 E-48*z^4*(15360*z^12-10304*z^10+5704*z^8-104*z^6-1254*z^4+245*z^2+27)*w[2]_-1 S[3,1](1,2)_-1 E+24*z^4*(2*z^2-1)*(16*z^2-3)*(768*z^10-1712*z^8+1136*z^6-284*z^4-27*z^2+18)*w[1]_-1 S[3,1](1,2)_-1 E+72*z^4*(16*z^2-3)*(512*z^10-1184*z^8+1016*z^6-84*z^4-96*z^2+15)*w_0 w_0 S[3,1](1,2)_-1 E)+(-24*z^4*(2*z^2-1)^2*(16*z^2-3)*(768*z^8-976*z^6+802*z^4+11*z^2-90)*S[3,1](1,3)_-2 E-24*z^4*(2*z^2-1)*(16*z^2-3)*(896*z^8-1752*z^6+618*z^4+263*z^2-78)*w_0 S[3,1](1,3)_-1 E+z^4*(16*z^2-3)*(82944*z^14-215232*z^12+313736*z^10-145564*z^8+37238*z^6+2169*z^4-3404*z^2+216)*I*w[3]_-2 S[3,2](1,1)_-1 E-2*z^4*(16*z^2-3)*(76800*z^14-205888*z^12+302552*z^10-143828*z^8+37298*z^6+2291*z^4-3404*z^2+216)*I*w[3]_-1 S[3,2](1,1)_-2 E-24*z^4*(2*z^2+1)*(16*z^2-3)*(3456*z^10-5416*z^8+3176*z^6-734*z^4-395*z^2+162)*I*S[3,2](1,1)_-4 E-8*z^2*(2*z^2+1)*(21504*z^14-56256*z^12+41832*z^10-15568*z^8+2582*z^6-38*z^4-131*z^2+54)*I*w[2]_-1 S[3,2](1,1)_-2 E+8*z^2*(21504*z^16-216000*z^14+214440*z^12-89908*z^10+12174*z^8+4139*z^6-921*z^4-58*z^2-54)*I*w[2]_-2 S[3,2](1,1)_-1 E-48*z^6*(16*z^2-3)*(768*z^10-2288*z^8+1868*z^6-422*z^4+30*z^2-9)*I*w[1]_-1 S[3,2](1,1)_-2 E-10*z^4*(16*z^2-3)*(15360*z^14-14144*z^12+19704*z^10+3964*z^8-7542*z^6+1591*z^4+828*z^2-72)*I*w_0 w[3]_-1 S[3,2](1,1)_-1 E+144*z^4*(2*z^2+1)*(16*z^2-3)*(64*z^10+124*z^8-182*z^6-12*z^4+29*z^2+9)*I*w_0 S[3,2](1,1)_-3 E-8*z^2*(12288*z^16-123648*z^14+220032*z^12-133048*z^10+10836*z^8+5888*z^6-942*z^4+23*z^2-54)*I*w_0 w[2]_-1 S[3,2](1,1)_-1 E+24*z^4*(16*z^2-3)*(1536*z^10-2016*z^8-184*z^6+586*z^4-25*z^2-18)*I*w_0 w_0 w_0 S[3,2](1,1)_-1 E+2*z^4*(16*z^2-3)*(76800*z^14-205888*z^12+302552*z^10-143828*z^8+37298*z^6+2291*z^4-3404*z^2+216)*I*w[3]_-1 S[3,2](1,2)_-1 E+24*z^4*(2*z^2+1)*(16*z^2-3)*(1536*z^10-3328*z^8+1400*z^6+220*z^4-191*z^2+18)*I*S[3,2](1,2)_-3 E+24*z^6*(16*z^2-3)*(1536*z^10-2656*z^8+3376*z^6-1504*z^4+150*z^2+27)*I*w[1]_-1 S[3,2](1,2)_-1 E+24*z^4*(2*z^2+1)*(16*z^2-3)*(256*z^8+1168*z^6-622*z^4+23*z^2+12)*I*w_0 S[3,2](1,3)_-1 E)', 'rhs': '0'},
     ]},
    {'name': 'sec3-rewrites',
     'context': {'norm': 'symbolic', 'rank': 1, 'momentum': True},
     'entries': [
        {'anchor': 'eq:h(-2)h(-1)=omega0', 'lhs': 'h[1](-2) h[1](-1) vac', 'rhs': 'w_0 w'},
        {'anchor': 'eq:h(-2)h(-1)=omega0', 'lhs': 'h[1](-3) h[1](-1) vac', 'rhs': 'H+(1)/(3)*w_0 w_0 w'},
        {'anchor': 'eq:h(-2)h(-1)=omega0', 'lhs': 'h[1](-2) h[1](-2) vac', 'rhs': '-2*H+(1)/(3)*w_0 w_0 w'},
        {'anchor': 'eq:h(-2)h(-1)=omega0', 'lhs': 'h[1](-3) h[1](-2) vac', 'rhs': '(-1)/(2)*w_0 H+(1)/(12)*w_0 w_0 w_0 w'},
        {'anchor': 'eq:h(-2)h(-1)=omega0', 'lhs': 'h[1](-3) h[1](-3) vac', 'rhs': '(1)/(3)*w_-2 w_-2 vac+(4)/(5)*w_-1 H+(-1)/(15)*w_0 w_0 w_-1 w+(-3)/(10)*w_0 w_0 H+(1)/(45)*w_0 w_0 w_0 w_0 w'},
        {'anchor': 'eq:w-2h-2wh3h', 'lhs': 'w_-2 h(-1) vac-2*w_-1 h(-2) vac+3*h(-4) vac', 'rhs': '0'},
     ]},
]
