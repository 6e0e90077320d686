"""Identity table data (generated transcription; do not edit by hand)."""

SUITE = 'app-8.1-rank1'
ANCHOR = 'app:8.1'
CONTEXT = {'norm': 'symbolic', 'rank': 1, 'momentum': False}
ENTRIES = [
    ('w_0 w',
     'w_0 w_-1 vac'),
    ('w_1 w',
     '2*w_-1 vac'),
    ('w_2 w',
     '0'),
    ('w_3 w',
     '(1)/(2)*vac'),
    ('w_0 H',
     'w_0 H_-1 vac'),
    ('w_1 H',
     '4*H_-1 vac'),
    ('w_2 H',
     '(-1)/(3)*w_0 w_-1 vac'),
    ('w_3 H',
     '2*w_-1 vac'),
    ('w_4 H',
     '0'),
    ('w_5 H',
     '(-1)/(3)*vac'),
    ('H_0 H',
     '2*w_0 w_-2 w_-2 vac+(24)/(5)*w_0 w_-1 H_-1 vac+(-2)/(5)*w_0 w_0 w_0 w_-1 w_-1 vac+(-3)/(10)*w_0 w_0 w_0 H_-1 vac+(1)/(20)*w_0 w_0 w_0 w_0 w_0 w_-1 vac'),
    ('H_1 H',
     '4*w_-2 w_-2 vac+(48)/(5)*w_-1 H_-1 vac+(-4)/(5)*w_0 w_0 w_-1 w_-1 vac+(16)/(15)*w_0 w_0 H_-1 vac+(7)/(45)*w_0 w_0 w_0 w_0 w_-1 vac'),
    ('H_2 H',
     '10*w_0 H_-1 vac+(7)/(18)*w_0 w_0 w_0 w_-1 vac'),
    ('H_3 H',
     '20*H_-1 vac+(4)/(3)*w_0 w_0 w_-1 vac'),
    ('H_4 H',
     '(10)/(3)*w_0 w_-1 vac'),
    ('H_5 H',
     '(20)/(3)*w_-1 vac'),
    ('H_6 H',
     '0'),
    ('H_7 H',
     '(5)/(3)*vac'),
]
