"""アルファベット・語・Parikhベクトルと有限言語上のシャッフル代数。"""
