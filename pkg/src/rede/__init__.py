"""Pacote de topologia, roteamento e espectro da rede óptica elástica."""
